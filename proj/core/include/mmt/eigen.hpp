#pragma once

#include "mmt/matrix.hpp"

#include <cstddef>
#include <vector>

namespace mmt {

/// Exact spectral decomposition of a matrix of finite multiplicative
/// order: a = sum_k lambda_k P_k with idempotent, pairwise annihilating
/// projectors summing to the identity.
struct EigenStructure {
    unsigned order = 1;                   ///< m with a^m = identity
    std::vector<CycScalar> eigenvalues;   ///< distinct m-th roots of unity
    std::vector<ExactMatrix> projectors;  ///< same length as eigenvalues
    std::vector<std::size_t> multiplicities;

    std::size_t count() const { return eigenvalues.size(); }
};

/// Spectral split of a matrix with a^m = identity, m dividing the
/// cyclotomic order. Projectors are computed by averaging characters over
/// the powers of a:
///   P_k = (1/m) * sum_{j<m} zeta_m^(-k*j) * a^j
/// Eigenvalues with zero projector are dropped. Throws OrderError when
/// a^m != identity and FieldError when m does not divide N.
EigenStructure finite_order_eigensplit(const ExactMatrix& a, unsigned m);

} // namespace mmt
