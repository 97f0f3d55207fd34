#pragma once

#include "mmt/isotropy.hpp"
#include "mmt/matrix.hpp"
#include "mmt/tensor.hpp"

#include <random>
#include <vector>

namespace mmt::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_abs = 3) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 2);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline CycScalar random_scalar(const FieldPtr& field, Rng& rng, int max_abs = 2) {
    std::vector<Rational> coeffs;
    coeffs.reserve(field->degree());
    for (unsigned i = 0; i < field->degree(); ++i)
        coeffs.push_back(random_rational(rng, max_abs));
    return field->from_coeffs(std::move(coeffs));
}

inline ExactMatrix random_rational_matrix(const FieldPtr& field, std::size_t n, Rng& rng) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, field->rational(random_rational(rng)));
    return m;
}

inline ExactMatrix random_invertible_rational(const FieldPtr& field, std::size_t n,
                                              Rng& rng) {
    for (;;) {
        ExactMatrix m = random_rational_matrix(field, n, rng);
        if (!m.determinant().is_zero()) return m;
    }
}

inline ExactMatrix random_matrix(const FieldPtr& field, std::size_t rows,
                                 std::size_t cols, Rng& rng, int max_abs = 2) {
    for (;;) {
        ExactMatrix m(field, rows, cols);
        bool nonzero = false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                CycScalar v = random_scalar(field, rng, max_abs);
                if (!v.is_zero()) nonzero = true;
                m.set(i, j, v);
            }
        if (nonzero) return m;
    }
}

inline RankOneTerm random_term(const FieldPtr& field, const Shape& shape, Rng& rng) {
    return RankOneTerm(random_matrix(field, shape.m, shape.n, rng),
                       random_matrix(field, shape.n, shape.p, rng),
                       random_matrix(field, shape.p, shape.m, rng));
}

/// Conjugated root-of-unity diagonal: s diag(zeta^k_i) s^-1. Entries lie
/// in Q(zeta_N) and the matrix satisfies a^N = identity.
inline ExactMatrix random_finite_order_matrix(const FieldPtr& field, std::size_t n,
                                              Rng& rng, bool force_non_scalar = false) {
    std::uniform_int_distribution<unsigned> exp(0, field->order() - 1);
    for (;;) {
        std::vector<CycScalar> diag;
        std::vector<unsigned> ks;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned k = exp(rng);
            ks.push_back(k);
            diag.push_back(field->zeta(static_cast<long>(k)));
        }
        if (force_non_scalar) {
            bool all_equal = true;
            for (unsigned k : ks)
                if (k != ks[0]) all_equal = false;
            if (all_equal) continue;
        }
        ExactMatrix s = random_invertible_rational(field, n, rng);
        return s * ExactMatrix::diagonal(field, diag) * s.inverse();
    }
}

/// A single Jordan block J_n(lambda) with lambda a small nonzero rational.
inline ExactMatrix jordan_block(const FieldPtr& field, std::size_t n, const Rational& lambda) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, field->rational(lambda));
        if (i + 1 < n) m.set(i, i + 1, field->one());
    }
    return m;
}

} // namespace mmt::testing
