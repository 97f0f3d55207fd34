// Acceptance suite: one line per criterion, exact checks throughout,
// wall-clock budgets where stated. Exits nonzero when any criterion fails.
#include "mmt/bounds.hpp"
#include "mmt/eigen.hpp"
#include "mmt/fixtures.hpp"
#include "mmt/isotropy.hpp"
#include "mmt/poly.hpp"
#include "mmt/symmetrize.hpp"
#include "mmt/tensor.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace mmt;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& text) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << text
              << "\n";
    if (!ok) ++failures;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int max_abs = 3) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 2);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

ExactMatrix random_invertible_rational(const FieldPtr& field, std::size_t n, Rng& rng) {
    for (;;) {
        ExactMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, field->rational(random_rational(rng)));
        if (!m.determinant().is_zero()) return m;
    }
}

CycScalar random_scalar(const FieldPtr& field, Rng& rng) {
    std::vector<Rational> coeffs;
    for (unsigned i = 0; i < field->degree(); ++i) coeffs.push_back(random_rational(rng, 2));
    return field->from_coeffs(std::move(coeffs));
}

ExactMatrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols,
                          Rng& rng) {
    for (;;) {
        ExactMatrix m(field, rows, cols);
        bool nonzero = false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                CycScalar v = random_scalar(field, rng);
                if (!v.is_zero()) nonzero = true;
                m.set(i, j, v);
            }
        if (nonzero) return m;
    }
}

ExactMatrix jordan_block(const FieldPtr& field, std::size_t n, long lambda) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, field->integer(lambda));
        if (i + 1 < n) m.set(i, i + 1, field->one());
    }
    return m;
}

ExactMatrix random_finite_order_non_scalar(const FieldPtr& field, Rng& rng) {
    std::uniform_int_distribution<unsigned> exp(0, field->order() - 1);
    for (;;) {
        std::vector<unsigned> ks = {exp(rng), exp(rng), exp(rng)};
        if (ks[0] == ks[1] && ks[1] == ks[2]) continue;
        std::vector<CycScalar> diag;
        for (unsigned k : ks) diag.push_back(field->zeta(static_cast<long>(k)));
        ExactMatrix s = random_invertible_rational(field, 3, rng);
        return s * ExactMatrix::diagonal(field, diag) * s.inverse();
    }
}

void criterion1(const FieldPtr& field) {
    auto start = Clock::now();
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t m = 1; m <= 3 && ok; ++m)
        for (std::size_t n = 1; n <= 3 && ok; ++n)
            for (std::size_t p = 1; p <= 3 && ok; ++p) {
                ok = verify(classical_decomposition(field, Shape(m, n, p))).valid;
                ++checked;
            }
    ok = ok && verify(strassen_222(field)).valid;
    ok = ok && verify(laderman_333(field)).valid;
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 5.0;
    std::ostringstream text;
    text << checked << " classical shapes + strassen + laderman verify exactly ("
         << elapsed << " s, budget 5 s)";
    report(1, ok, text.str());
}

void criterion2() {
    auto rows = partition_case_table();
    auto bound_of = [&](std::initializer_list<std::size_t> d,
                        std::initializer_list<std::size_t> f) -> long {
        Partition3 dbar{std::vector<std::size_t>(d)}, fbar{std::vector<std::size_t>(f)};
        for (const auto& row : rows)
            if (row.dbar == dbar && row.fbar == fbar) return row.bound;
        return -1;
    };
    bool ok = bound_of({2, 1}, {3}) == 23;
    ok = ok && bound_of({2, 1}, {2, 1}) == 26;
    ok = ok && bound_of({2, 1}, {1, 1, 1}) == 27;
    ok = ok && bound_of({1, 1, 1}, {3}) == 27;
    ok = ok && bound_of({1, 1, 1}, {2, 1}) == 27;
    ok = ok && bound_of({1, 1, 1}, {1, 1, 1}) == 27;
    ok = ok && case_table_minimum() == 23;
    report(2, ok, "case table: ({2,1},{3})=23, ({2,1},{2,1})=26, rest 27, minimum 23");
}

void criterion3(const FieldPtr& field) {
    auto start = Clock::now();
    Rng rng(20260808);
    const Shape cube(3, 3, 3);
    Decomposition classical = classical_decomposition(field, cube);
    DenseTensor target = matmul_tensor(field, cube);
    int trials = 0;
    bool ok = true;
    for (; trials < 200 && ok; ++trials) {
        IsotropyElement g = IsotropyElement::sandwich(
            random_invertible_rational(field, 3, rng),
            random_invertible_rational(field, 3, rng),
            random_invertible_rational(field, 3, rng));
        ok = expand(act_on_decomposition(g, classical)) == target;
    }
    for (auto q : {FactorSymmetry::S, FactorSymmetry::R}) {
        if (!ok) break;
        ok = expand(act_on_decomposition(IsotropyElement::symmetry(field, cube, q),
                                         classical)) == target;
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 30.0;
    std::ostringstream text;
    text << trials << " random sandwich transforms plus the rotation and reflection "
         << "preserve the tensor (" << elapsed << " s, budget 30 s)";
    report(3, ok, text.str());
}

void criterion4(const FieldPtr& field) {
    Rng rng(424242);
    std::uniform_int_distribution<std::size_t> size(2, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    int checked = 0;
    bool ok = true;
    while (checked < 100 && ok) {
        bool a_diag = coin(rng) == 1;
        bool b_diag = coin(rng) == 1;
        auto make = [&](bool diag) {
            std::size_t n = size(rng);
            if (diag) {
                // conjugated diagonal with root-of-unity spectrum
                std::uniform_int_distribution<unsigned> exp(0, field->order() - 1);
                std::vector<CycScalar> d;
                for (std::size_t i = 0; i < n; ++i)
                    d.push_back(field->zeta(static_cast<long>(exp(rng))));
                ExactMatrix s = random_invertible_rational(field, n, rng);
                return s * ExactMatrix::diagonal(field, d) * s.inverse();
            }
            long lambda = 1 + static_cast<long>(exp2(coin(rng)));
            ExactMatrix s = random_invertible_rational(field, n, rng);
            return s * jordan_block(field, n, lambda) * s.inverse();
        };
        ExactMatrix a = make(a_diag);
        ExactMatrix b = make(b_diag);
        ok = is_diagonalizable(kron(a, b)) == (a_diag && b_diag);
        ++checked;
    }
    std::ostringstream text;
    text << checked << " kron pairs: diagonalizable iff both factors are";
    report(4, ok, text.str());
}

void criterion5(const FieldPtr& field) {
    Rng rng(555);
    const Shape cube(3, 3, 3);
    int trials = 0;
    bool ok = true;
    while (trials < 100 && ok) {
        ExactMatrix a = random_finite_order_non_scalar(field, rng);
        IsotropyElement g = IsotropyElement::sandwich(
            a, ExactMatrix::identity(field, 3), ExactMatrix::identity(field, 3));
        RankOneTerm w(random_matrix(field, 3, 3, rng), random_matrix(field, 3, 3, rng),
                      random_matrix(field, 3, 3, rng));
        auto members = orbit(g, w);
        auto reduced = symmetrize_orbit(g, w);
        // (i) exact sum against brute-force orbit summation
        ok = expand_terms(field, cube, reduced) == expand_terms(field, cube, members);
        // (ii) termwise fixed
        for (const auto& t : reduced) ok = ok && apply_to_term(g, t) == t;
        // (iii) no longer than the orbit
        ok = ok && reduced.size() <= members.size();
        ++trials;
    }
    std::ostringstream text;
    text << trials << " random orbits: exact sums, invariant outputs, length bounded";
    report(5, ok, text.str());
}

void criterion6(const FieldPtr& field) {
    bool ok = true;
    // diagonal a, b with coordinate eigenspaces, several spectra
    std::vector<std::pair<std::vector<long>, std::vector<long>>> cases = {
        {{0, 6, 6}, {0, 0, 6}},   // signs via zeta^6 = -1
        {{0, 4, 8}, {0, 4, 8}},   // cube roots
        {{0, 0, 6}, {0, 3, 9}},   // order 2 against order 4
        {{0, 0, 0}, {0, 0, 0}},   // trivial split
    };
    for (const auto& [da, db] : cases) {
        std::vector<CycScalar> ad, bd;
        for (long k : da) ad.push_back(field->zeta(k));
        for (long k : db) bd.push_back(field->zeta(k));
        ExactMatrix a = ExactMatrix::diagonal(field, ad);
        ExactMatrix b = ExactMatrix::diagonal(field, bd);
        EigenSplitPlan plan = split_by_eigenvalues(a, b, 12, 12);
        DenseTensor sum(field, Shape(3, 3, 3));
        for (std::size_t c = 0; c < plan.classes.size(); ++c) {
            DenseTensor component = tensor_component(plan, c);
            // explicit coordinate formula over S = {(alpha, beta) :
            // a_aa / b_bb = sigma}
            DenseTensor expected(field, Shape(3, 3, 3));
            for (std::size_t alpha = 0; alpha < 3; ++alpha)
                for (std::size_t beta = 0; beta < 3; ++beta) {
                    if (ad[alpha] * bd[beta].inverse() != plan.classes[c].sigma) continue;
                    for (std::size_t gamma = 0; gamma < 3; ++gamma)
                        expected.set(alpha * 3 + beta, beta * 3 + gamma, gamma * 3 + alpha,
                                     field->one());
                }
            ok = ok && component == expected;
            sum = sum + component;
        }
        ok = ok && sum == matmul_tensor(field, Shape(3, 3, 3));
    }
    report(6, ok, "diagonal splits match the explicit coordinate tensors and sum back");
}

void criterion7(const FieldPtr& field) {
    const Shape cube(3, 3, 3);
    Decomposition classical = classical_decomposition(field, cube);
    std::vector<IsotropyElement> gens = {
        IsotropyElement::symmetry(field, cube, FactorSymmetry::S),
        IsotropyElement::symmetry(field, cube, FactorSymmetry::R)};
    auto closure = group_closure(gens);
    bool ok = closure.size() == 6;
    InjectivityResult result = injectivity_certificate(classical, closure);
    ok = ok && result.injective && !result.witness.has_value();
    std::set<FactorSymmetry> betas;
    for (const auto& rep : result.reports) betas.insert(rep.beta);
    ok = ok && betas.size() == 6;
    report(7, ok,
           "closure of the factor symmetries has size 6, (alpha, beta) injective, "
           "betas exhaust the factor permutations");
}

void criterion8() {
    double t7 = tau_exponent(Shape(2, 2, 2), 7);
    double t23 = tau_exponent(Shape(3, 3, 3), 23);
    bool ok = std::abs(t7 - 2.8074) < 1e-3 && std::abs(t23 - 2.8540) < 1e-3;
    std::ostringstream text;
    text << "tau(2,2,2,7) = " << t7 << ", tau(3,3,3,23) = " << t23
         << " (tolerance 1e-3)";
    report(8, ok, text.str());
}

} // namespace

int main() {
    auto field = CyclotomicField::get(12);
    criterion1(field);
    criterion2();
    criterion3(field);
    criterion4(field);
    criterion5(field);
    criterion6(field);
    criterion7(field);
    criterion8();
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
