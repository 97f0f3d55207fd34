#include "mmt/field.hpp"

#include "mmt/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mmt;

TEST_CASE("rational parsing and printing") {
    CHECK(rational_to_string(parse_rational("5")) == "5");
    CHECK(rational_to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("field degrees and moduli") {
    CHECK(CyclotomicField::get(1)->degree() == 1);
    CHECK(CyclotomicField::get(2)->degree() == 1);
    CHECK(CyclotomicField::get(3)->degree() == 2);
    CHECK(CyclotomicField::get(4)->degree() == 2);
    CHECK(CyclotomicField::get(12)->degree() == 4);
    // Phi_12 = x^4 - x^2 + 1
    auto mod = CyclotomicField::get(12)->modulus();
    CHECK(mod == std::vector<Rational>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta_4 squared is -1") {
    auto f = CyclotomicField::get(4);
    CHECK(f->zeta() * f->zeta() == f->integer(-1));
}

TEST_CASE("rational arithmetic embeds") {
    auto f = CyclotomicField::get(12);
    CHECK(f->rational(Rational(1, 2)) + f->rational(Rational(1, 3)) ==
          f->rational(Rational(5, 6)));
}

TEST_CASE("zeta_3 + zeta_3^2 = -1") {
    auto f = CyclotomicField::get(3);
    CHECK(f->zeta(1) + f->zeta(2) == f->integer(-1));
}

TEST_CASE("division by zero is rejected") {
    auto f = CyclotomicField::get(12);
    CHECK_THROWS_AS(f->one() / f->zero(), FieldError);
}

TEST_CASE("powers of zeta wrap around") {
    auto f = CyclotomicField::get(12);
    CHECK(f->zeta(12) == f->one());
    for (long k = 0; k < 12; ++k) CHECK(f->zeta(k) * f->zeta(12 - k) == f->one());
    CHECK(f->zeta(-1) == f->zeta(11));
}

TEST_CASE("roots of unity of dividing order") {
    auto f = CyclotomicField::get(12);
    CHECK(f->root_of_unity(3, 1) == f->zeta(4));
    CHECK(f->root_of_unity(2, 1) == f->integer(-1));
    CHECK_THROWS_AS(f->root_of_unity(5, 1), FieldError);
}

TEST_CASE("inverses of random elements") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(2024);
    int done = 0;
    while (done < 50) {
        CycScalar a = testing::random_scalar(f, rng);
        if (a.is_zero()) continue;
        ++done;
        CHECK(a * a.inverse() == f->one());
        CHECK(a.inverse().inverse() == a);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(7);
    CycScalar a = testing::random_scalar(f, rng);
    CycScalar acc = f->one();
    for (int e = 0; e < 6; ++e) {
        CHECK(a.pow(e) == acc);
        acc *= a;
    }
}

TEST_CASE("the roots-of-unity group has order lcm(2, N)") {
    CHECK(CyclotomicField::get(12)->all_roots_of_unity().size() == 12);
    CHECK(CyclotomicField::get(3)->all_roots_of_unity().size() == 6);
    CHECK(CyclotomicField::get(1)->all_roots_of_unity().size() == 2);
}

TEST_CASE("scalar roots") {
    auto f = CyclotomicField::get(12);

    SUBCASE("cube root of zeta_4 exists") {
        CycScalar s = f->scalar_root(f->root_of_unity(4), 3);
        CHECK(s.pow(3) == f->root_of_unity(4));
    }
    SUBCASE("cube root of 8 and of -8") {
        CHECK(f->scalar_root(f->integer(8), 3).pow(3) == f->integer(8));
        CHECK(f->scalar_root(f->integer(-8), 3).pow(3) == f->integer(-8));
    }
    SUBCASE("square root of 1/4") {
        CycScalar s = f->scalar_root(f->rational(Rational(1, 4)), 2);
        CHECK(s * s == f->rational(Rational(1, 4)));
    }
    SUBCASE("cube root of zeta_3 does not exist in Q(zeta_12)") {
        CHECK_THROWS_AS(f->scalar_root(f->root_of_unity(3), 3), FieldError);
    }
    SUBCASE("square root of 2 does not exist") {
        CHECK_THROWS_AS(f->scalar_root(f->integer(2), 2), FieldError);
    }
}

TEST_CASE("mixed-order arithmetic is rejected") {
    auto f4 = CyclotomicField::get(4);
    auto f12 = CyclotomicField::get(12);
    CHECK_THROWS_AS(f4->one() + f12->one(), FieldError);
}

TEST_CASE("scalar ordering is a strict total order on samples") {
    auto f = CyclotomicField::get(12);
    testing::Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        CycScalar a = testing::random_scalar(f, rng);
        CycScalar b = testing::random_scalar(f, rng);
        int ab = CycScalar::compare(a, b);
        int ba = CycScalar::compare(b, a);
        CHECK(ab == -ba);
        CHECK((ab == 0) == (a == b));
    }
}
