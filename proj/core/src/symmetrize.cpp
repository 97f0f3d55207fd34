#include "mmt/symmetrize.hpp"

#include "mmt/eigen.hpp"
#include "mmt/errors.hpp"

#include <algorithm>

namespace mmt {

unsigned symmetrize_order_cap(const FieldPtr& field) {
    return 6 * field->order();
}

std::vector<RankOneTerm> orbit(const IsotropyElement& g, const RankOneTerm& w,
                               unsigned cap) {
    if (cap == 0) cap = symmetrize_order_cap(g.field());
    std::vector<RankOneTerm> members;
    RankOneTerm start = canonical_term(w);
    RankOneTerm cur = start;
    for (unsigned step = 0; step < cap; ++step) {
        members.push_back(cur);
        cur = apply_to_term(g, cur);
        if (cur == start) return members;
    }
    throw CapError("orbit did not close within " + std::to_string(cap) + " steps");
}

namespace {

// g must be a sandwich with scalar b and c; those act trivially, so the
// element equals T(a,E,E).
void require_first_slot_form(const IsotropyElement& g) {
    if (!g.is_sandwich() || !g.b().is_scalar() || !g.c().is_scalar())
        throw Error("unsupported generator shape: expected T(a,E,E) "
                    "(identity factor symmetry, scalar b and c)");
}

} // namespace

std::vector<RankOneTerm> symmetrize_orbit(const IsotropyElement& g, const RankOneTerm& w) {
    require_first_slot_form(g);
    const FieldPtr& field = g.field();
    const unsigned cap = symmetrize_order_cap(field);

    const unsigned m = element_order(g, cap);
    // rescale so that a^m = E exactly; b, c become identities
    IsotropyElement norm = normalize_to_finite_order(
        IsotropyElement::sandwich(g.a(), ExactMatrix::identity(field, g.b().rows()),
                                  ExactMatrix::identity(field, g.c().rows())),
        m);

    const std::vector<RankOneTerm> members = orbit(norm, w, cap);
    const unsigned l = static_cast<unsigned>(members.size());
    if (m % l != 0) throw Error("internal: orbit length does not divide the order");

    EigenStructure eig = finite_order_eigensplit(norm.a(), m);
    const ExactMatrix& x = w.x();
    const ExactMatrix& y = w.y();
    const ExactMatrix& z = w.z();
    const CycScalar scale = field->integer(static_cast<long>(l));

    std::vector<RankOneTerm> out;
    for (std::size_t i = 0; i < eig.count(); ++i) {
        ExactMatrix xi = eig.projectors[i] * x; // component with a xi = lambda_i xi
        if (xi.is_zero()) continue;
        ExactMatrix zi = z * eig.projectors[i]; // component with zi a^-1 = lambda_i^-1 zi
        if (zi.is_zero()) continue;
        out.push_back(canonical_term(RankOneTerm(xi.scaled(scale), y, zi)));
    }
    if (out.size() > members.size())
        throw Error("internal: symmetrization produced more terms than the orbit");
    return out;
}

Decomposition symmetrize_decomposition(const IsotropyElement& g, const Decomposition& d) {
    require_first_slot_form(g);
    std::vector<RankOneTerm> pool = d.terms(); // canonical, sorted
    std::vector<RankOneTerm> output;

    auto take_one = [&pool](const RankOneTerm& t) -> bool {
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const RankOneTerm& u) { return u == t; });
        if (it == pool.end()) return false;
        pool.erase(it);
        return true;
    };

    while (!pool.empty()) {
        RankOneTerm seed = pool.front();
        pool.erase(pool.begin());
        std::vector<RankOneTerm> members = orbit(g, seed);
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (!take_one(members[i]))
                throw Error("decomposition is not invariant under the generator");
        }
        auto reduced = symmetrize_orbit(g, seed);
        output.insert(output.end(), reduced.begin(), reduced.end());
    }
    return Decomposition(d.field(), d.shape(), std::move(output));
}

} // namespace mmt
