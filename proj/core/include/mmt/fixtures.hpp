#pragma once

#include "mmt/tensor.hpp"

#include <string>
#include <vector>

namespace mmt {

/// The defining mnp-term decomposition of <m,n,p>: one term
/// e_ij (x) e_jk (x) e_ki per index triple.
Decomposition classical_decomposition(const FieldPtr& field, const Shape& shape);

/// Strassen's 7-term decomposition of <2,2,2>.
Decomposition strassen_222(const FieldPtr& field);

/// Laderman's 23-term decomposition of <3,3,3>.
Decomposition laderman_333(const FieldPtr& field);

struct Fixture {
    std::string name;
    Decomposition decomposition;
};

/// Everything shipped with the CLI: classical <m,n,p> for all dimensions
/// up to 3, plus the Strassen and Laderman schemes.
std::vector<Fixture> bundled_fixtures(const FieldPtr& field);

} // namespace mmt
