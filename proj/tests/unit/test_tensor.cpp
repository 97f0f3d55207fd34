#include "mmt/tensor.hpp"

#include "mmt/errors.hpp"
#include "mmt/fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace mmt;

TEST_CASE("matmul tensor unit coordinates") {
    auto f = CyclotomicField::get(12);
    SUBCASE("<1,1,1> is a single 1") {
        DenseTensor t = matmul_tensor(f, Shape(1, 1, 1));
        CHECK(t.nonzero_count() == 1);
        CHECK(t.at(0, 0, 0).is_one());
    }
    SUBCASE("<2,2,2> has 8 unit coordinates") {
        DenseTensor t = matmul_tensor(f, Shape(2, 2, 2));
        CHECK(t.nonzero_count() == 8);
        for (const auto& c : t.nonzero_coords()) CHECK(c.value.is_one());
    }
    SUBCASE("<3,3,3> has 27 unit coordinates among 9x9x9") {
        DenseTensor t = matmul_tensor(f, Shape(3, 3, 3));
        CHECK(t.nonzero_count() == 27);
        // spot-check the coordinate pattern ((i,j),(j,k),(k,i))
        CHECK(t.at(0 * 3 + 1, 1 * 3 + 2, 2 * 3 + 0).is_one());
        CHECK(t.at(0, 0, 0).is_one());
        CHECK(t.at(0 * 3 + 1, 2 * 3 + 2, 2 * 3 + 0).is_zero());
    }
}

TEST_CASE("classical decompositions expand to the tensor") {
    auto f = CyclotomicField::get(12);
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t p = 1; p <= 3; ++p) {
                Shape shape(m, n, p);
                Decomposition d = classical_decomposition(f, shape);
                CHECK(d.size() == m * n * p);
                CHECK(verify(d).valid);
            }
}

TEST_CASE("strassen expands to <2,2,2>") {
    auto f = CyclotomicField::get(12);
    Decomposition d = strassen_222(f);
    CHECK(d.size() == 7);
    auto res = verify(d);
    CHECK(res.valid);
    CHECK_FALSE(res.residual.has_value());
}

TEST_CASE("laderman expands to <3,3,3>") {
    auto f = CyclotomicField::get(12);
    Decomposition d = laderman_333(f);
    CHECK(d.size() == 23);
    CHECK(verify(d).valid);
    // every factor space is fully spanned
    for (int factor : {1, 2, 3}) CHECK(projection(d.terms(), factor).size() == 9);
}

TEST_CASE("the bundled fixture set verifies") {
    auto f = CyclotomicField::get(12);
    auto fixtures = bundled_fixtures(f);
    CHECK(fixtures.size() == 29);
    for (const auto& fx : fixtures) CHECK(verify(fx.decomposition).valid);
}

TEST_CASE("classical decompositions cover rectangular shapes") {
    auto f = CyclotomicField::get(12);
    Decomposition d = classical_decomposition(f, Shape(2, 3, 4));
    CHECK(d.size() == 24);
    CHECK(verify(d).valid);
}

TEST_CASE("empty decomposition expands to zero") {
    auto f = CyclotomicField::get(12);
    Decomposition d(f, Shape(2, 2, 2), {});
    CHECK(expand(d).is_zero());
    CHECK_FALSE(verify(d).valid);
}

TEST_CASE("deleting a term leaves exactly its support as residual") {
    auto f = CyclotomicField::get(12);
    Decomposition d = strassen_222(f);
    std::vector<RankOneTerm> terms(d.terms().begin(), d.terms().end() - 1);
    RankOneTerm removed = d.terms().back();
    Decomposition shorter(f, d.shape(), terms);
    auto res = verify(shorter);
    REQUIRE_FALSE(res.valid);
    DenseTensor removed_tensor =
        expand_terms(f, d.shape(), std::span<const RankOneTerm>(&removed, 1));
    CHECK(*res.residual + removed_tensor == DenseTensor(f, d.shape()));
}

TEST_CASE("expansion is linear in the term multiset") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(31);
    Shape shape(2, 2, 2);
    std::vector<RankOneTerm> t1, t2, both;
    for (int i = 0; i < 3; ++i) t1.push_back(testing::random_term(f, shape, rng));
    for (int i = 0; i < 2; ++i) t2.push_back(testing::random_term(f, shape, rng));
    both = t1;
    both.insert(both.end(), t2.begin(), t2.end());
    CHECK(expand_terms(f, shape, both) ==
          expand_terms(f, shape, t1) + expand_terms(f, shape, t2));
}

TEST_CASE("canonical terms") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(32);
    Shape shape(2, 2, 2);

    SUBCASE("scalar shuffling collapses to one representative") {
        RankOneTerm t = testing::random_term(f, shape, rng);
        RankOneTerm scaled(t.x().scaled(f->integer(2)), t.y().scaled(f->integer(3)),
                           t.z());
        RankOneTerm moved(t.x(), t.y(), t.z().scaled(f->integer(6)));
        CHECK(canonical_term(scaled) == canonical_term(moved));
    }
    SUBCASE("idempotent") {
        RankOneTerm t = testing::random_term(f, shape, rng);
        CHECK(canonical_term(canonical_term(t)) == canonical_term(t));
    }
    SUBCASE("sign pairs cancel into z") {
        RankOneTerm t = testing::random_term(f, shape, rng);
        RankOneTerm flipped(t.x().scaled(f->integer(-1)), t.y().scaled(f->integer(-1)),
                            t.z());
        CHECK(canonical_term(flipped) == canonical_term(t));
    }
    SUBCASE("represents the same tensor") {
        for (int i = 0; i < 10; ++i) {
            RankOneTerm t = testing::random_term(f, shape, rng);
            RankOneTerm c = canonical_term(t);
            CHECK(expand_terms(f, shape, std::span<const RankOneTerm>(&t, 1)) ==
                  expand_terms(f, shape, std::span<const RankOneTerm>(&c, 1)));
        }
    }
}

TEST_CASE("zero factors are rejected") {
    auto f = CyclotomicField::get(12);
    ExactMatrix zero(f, 2, 2);
    ExactMatrix e(f, 2, 2);
    e.set(0, 0, f->one());
    CHECK_THROWS_AS(RankOneTerm(zero, e, e), ShapeError);
}

TEST_CASE("multiset equality ignores order and scaling") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(33);
    Shape shape(2, 2, 2);
    std::vector<RankOneTerm> terms;
    for (int i = 0; i < 4; ++i) terms.push_back(testing::random_term(f, shape, rng));
    // reorder and redistribute scalars across factors of one term
    RankOneTerm rescaled(terms[0].x().scaled(f->integer(5)), terms[0].y(),
                         terms[0].z().scaled(f->rational(Rational(1, 5))));
    std::vector<RankOneTerm> shuffled = {terms[2], rescaled, terms[3], terms[1]};
    CHECK(Decomposition(f, shape, terms) == Decomposition(f, shape, shuffled));
}

TEST_CASE("projection dimensions") {
    auto f = CyclotomicField::get(12);
    SUBCASE("defining terms of <3,3,3> project onto the whole factor") {
        Decomposition d = classical_decomposition(f, Shape(3, 3, 3));
        for (int factor : {1, 2, 3}) CHECK(projection(d.terms(), factor).size() == 9);
    }
    SUBCASE("a single term projects to a line") {
        testing::Rng rng(34);
        RankOneTerm t = testing::random_term(f, Shape(3, 3, 3), rng);
        CHECK(projection(std::span<const RankOneTerm>(&t, 1), 1).size() == 1);
    }
    SUBCASE("strassen projects onto full factors of <2,2,2>") {
        Decomposition d = strassen_222(f);
        for (int factor : {1, 2, 3}) CHECK(projection(d.terms(), factor).size() == 4);
    }
}

TEST_CASE("direct sums") {
    auto f = CyclotomicField::get(12);
    SUBCASE("leading/trailing convenience block placement") {
        DenseTensor w1 = matmul_tensor(f, Shape(1, 2, 3));
        DenseTensor w2 = matmul_tensor(f, Shape(2, 1, 3));
        DenseTensor sum = direct_sum(w1, w2);
        CHECK(sum.shape() == Shape(3, 3, 6));
        CHECK(sum.nonzero_count() == w1.nonzero_count() + w2.nonzero_count());
    }
    SUBCASE("summing with a zero tensor re-embeds") {
        DenseTensor w = matmul_tensor(f, Shape(2, 2, 2));
        DenseTensor zero(f, Shape(1, 1, 1));
        DenseTensor sum = direct_sum(w, zero);
        CHECK(sum.shape() == Shape(3, 3, 3));
        CHECK(sum.nonzero_count() == 8);
        // the w block sits at the leading coordinates
        for (const auto& c : matmul_tensor(f, Shape(2, 2, 2)).nonzero_coords()) {
            std::size_t i = c.r / 2, j = c.r % 2;
            std::size_t jp = c.s / 2, k = c.s % 2;
            std::size_t kp = c.t / 2, ip = c.t % 2;
            CHECK(sum.at(i * 3 + j, jp * 3 + k, kp * 3 + ip) == c.value);
        }
    }
    SUBCASE("three copies of <1,1,3> along the diagonal blocks") {
        // embeddings with row set {i}, column set {i} and full depth; the
        // result is the component of <3,3,3> supported on diagonal x
        DenseTensor unit = matmul_tensor(f, Shape(1, 1, 3));
        std::vector<std::pair<DenseTensor, BlockEmbedding>> parts;
        for (std::size_t i = 0; i < 3; ++i)
            parts.push_back({unit, BlockEmbedding{{i}, {i}, {0, 1, 2}}});
        DenseTensor zeta = direct_sum(parts, Shape(3, 3, 3));
        CHECK(zeta.nonzero_count() == 9);
        DenseTensor whole = matmul_tensor(f, Shape(3, 3, 3));
        for (const auto& c : zeta.nonzero_coords()) CHECK(whole.at(c.r, c.s, c.t) == c.value);
    }
    SUBCASE("overlapping blocks are rejected") {
        DenseTensor unit = matmul_tensor(f, Shape(1, 1, 3));
        std::vector<std::pair<DenseTensor, BlockEmbedding>> parts = {
            {unit, BlockEmbedding{{0}, {0}, {0, 1, 2}}},
            {unit, BlockEmbedding{{0}, {0}, {0, 1, 2}}},
        };
        CHECK_THROWS_AS(direct_sum(parts, Shape(3, 3, 3)), ShapeError);
    }
}

TEST_CASE("recursion exponents") {
    auto f = CyclotomicField::get(12);
    CHECK(std::abs(tau_exponent(Shape(2, 2, 2), 7) - 2.8074) < 1e-3);
    CHECK(tau_exponent(Shape(3, 3, 3), 27) == doctest::Approx(3.0));
    CHECK(std::abs(tau_exponent(Shape(3, 3, 3), 23) - 2.8540) < 1e-3);
    CHECK_THROWS_AS(tau_exponent(Shape(1, 1, 1), 2), ShapeError);
    (void)f;
}
