#pragma once

#include "mmt/isotropy.hpp"

#include <vector>

namespace mmt {

/// Default cap on power iteration when discovering orders and orbits:
/// 6 * N for cyclotomic order N.
unsigned symmetrize_order_cap(const FieldPtr& field);

/// Orbit [w, gw, ..., g^(l-1) w] of a term under the cyclic group of g,
/// as canonical terms; l is minimal with g^l w = w as tensors. Throws
/// CapError if no period is found within the cap.
std::vector<RankOneTerm> orbit(const IsotropyElement& g, const RankOneTerm& w,
                               unsigned cap = 0);

/// Replaces the orbit of w under g = T(a,E,E) (b and c scalar; a of
/// finite order) by at most l invariant terms with the same sum:
/// the eigencomponents x_i of x and z_i of z for a common eigenvalue pair
/// survive averaging over the group, cross pairs cancel, and the orbit
/// sum equals l * sum_i x_i (x) y (x) z_i. The scalar l is absorbed into
/// the x factor. Every output term is fixed by g.
std::vector<RankOneTerm> symmetrize_orbit(const IsotropyElement& g, const RankOneTerm& w);

/// Applies symmetrize_orbit to every orbit of a g-invariant
/// decomposition. The result decomposes the same tensor, is fixed
/// termwise by g, and is no longer than the input. Throws Error when the
/// input multiset is not invariant under g.
Decomposition symmetrize_decomposition(const IsotropyElement& g, const Decomposition& d);

} // namespace mmt
