#include "mmt/bounds.hpp"
#include "mmt/fixtures.hpp"
#include "mmt/isotropy.hpp"
#include "mmt/poly.hpp"
#include "mmt/symmetrize.hpp"
#include "mmt/tensor.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mmt;

namespace {

FieldPtr field() { return CyclotomicField::get(12); }

ExactMatrix bench_matrix(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    auto f = field();
    for (;;) {
        ExactMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, f->rational(Rational(num(rng), 2)));
        if (!m.determinant().is_zero()) return m;
    }
}

void BM_scalar_multiply(benchmark::State& state) {
    auto f = field();
    CycScalar a = f->from_coeffs({Rational(1, 2), Rational(3), Rational(-2, 5), Rational(7)});
    CycScalar b = f->from_coeffs({Rational(2), Rational(-1, 3), Rational(5), Rational(1, 7)});
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_multiply);

void BM_scalar_inverse(benchmark::State& state) {
    auto f = field();
    CycScalar a = f->from_coeffs({Rational(1, 2), Rational(3), Rational(-2, 5), Rational(7)});
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_scalar_inverse);

void BM_matrix_inverse_3x3(benchmark::State& state) {
    ExactMatrix m = bench_matrix(3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(m.inverse());
}
BENCHMARK(BM_matrix_inverse_3x3);

void BM_minimal_polynomial_9x9(benchmark::State& state) {
    ExactMatrix m = kron(bench_matrix(3, 2), bench_matrix(3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(m));
}
BENCHMARK(BM_minimal_polynomial_9x9);

void BM_expand_laderman(benchmark::State& state) {
    Decomposition d = laderman_333(field());
    for (auto _ : state) benchmark::DoNotOptimize(expand(d));
}
BENCHMARK(BM_expand_laderman);

void BM_verify_classical_333(benchmark::State& state) {
    Decomposition d = classical_decomposition(field(), Shape(3, 3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(verify(d));
}
BENCHMARK(BM_verify_classical_333);

void BM_act_on_laderman(benchmark::State& state) {
    Decomposition d = laderman_333(field());
    IsotropyElement g =
        IsotropyElement::sandwich(bench_matrix(3, 4), bench_matrix(3, 5), bench_matrix(3, 6));
    for (auto _ : state) benchmark::DoNotOptimize(act_on_decomposition(g, d));
}
BENCHMARK(BM_act_on_laderman);

void BM_eigensplit_order12(benchmark::State& state) {
    auto f = field();
    ExactMatrix s = bench_matrix(3, 7);
    ExactMatrix a = s *
                    ExactMatrix::diagonal(f, {f->zeta(0), f->zeta(4), f->zeta(6)}) *
                    s.inverse();
    for (auto _ : state) benchmark::DoNotOptimize(finite_order_eigensplit(a, 12));
}
BENCHMARK(BM_eigensplit_order12);

void BM_closure_factor_symmetries(benchmark::State& state) {
    auto f = field();
    const Shape cube(3, 3, 3);
    std::vector<IsotropyElement> gens = {
        IsotropyElement::symmetry(f, cube, FactorSymmetry::S),
        IsotropyElement::symmetry(f, cube, FactorSymmetry::R)};
    for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens));
}
BENCHMARK(BM_closure_factor_symmetries);

void BM_symmetrize_orbit(benchmark::State& state) {
    auto f = field();
    ExactMatrix s = bench_matrix(3, 8);
    ExactMatrix a = s *
                    ExactMatrix::diagonal(f, {f->one(), f->integer(-1), f->integer(-1)}) *
                    s.inverse();
    IsotropyElement g = IsotropyElement::sandwich(a, ExactMatrix::identity(f, 3),
                                                  ExactMatrix::identity(f, 3));
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(-2, 2);
    ExactMatrix x(f, 3, 3), y(f, 3, 3), z(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            x.set(i, j, f->integer(num(rng)));
            y.set(i, j, f->integer(num(rng)));
            z.set(i, j, f->integer(num(rng)));
        }
    x.set(0, 0, f->one());
    y.set(0, 0, f->one());
    z.set(0, 0, f->one());
    RankOneTerm w(x, y, z);
    for (auto _ : state) benchmark::DoNotOptimize(symmetrize_orbit(g, w));
}
BENCHMARK(BM_symmetrize_orbit);

void BM_case_table(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(partition_case_table());
}
BENCHMARK(BM_case_table);

} // namespace

BENCHMARK_MAIN();
