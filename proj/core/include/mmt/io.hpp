#pragma once

#include "mmt/isotropy.hpp"
#include "mmt/tensor.hpp"

#include <string>
#include <vector>

namespace mmt {

/// Text encodings shared with the CLI. A rational scalar is the string
/// "p" or "p/q"; a cyclotomic scalar is a list of phi(N) rational
/// strings, the coefficients on the power basis of zeta_N. Matrices are
/// lists of rows of scalars.
///
/// A decomposition file is a JSON object
///   { "shape": [m, n, p], "cyclotomic_order": N,
///     "terms": [ { "x": M, "y": M, "z": M }, ... ] }
/// The converter also accepts the triple-matrix layout
///   { "shape": ..., "cyclotomic_order": ..., "u": M, "v": M, "w": M }
/// where column k of u, v, w holds the row-major flattening of the k-th
/// term's x, y, z factors.
///
/// A generator file is
///   { "q": "id" | "s" | "s2" | "r" | "sr" | "s2r",
///     "a": M, "b": M, "c": M, "cyclotomic_order": N? }
/// with the order optional (the supplied default applies). Files holding
/// several generators use { "generators": [ ... ] } or a bare array.

Decomposition parse_decomposition(const std::string& json_text,
                                  unsigned default_order = 12);
std::string serialize_decomposition(const Decomposition& d);

IsotropyElement parse_generator(const std::string& json_text,
                                unsigned default_order = 12);
std::vector<IsotropyElement> parse_generators(const std::string& json_text,
                                              unsigned default_order = 12);
std::string serialize_generator(const IsotropyElement& g);

/// Helpers shared by the CLI for consistent reporting.
std::string scalar_text(const CycScalar& s);

} // namespace mmt
