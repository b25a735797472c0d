#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confop/rational.hpp>

using namespace confop;

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3);
    Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a + a + a == 1);
}

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("parsing accepts integers and fractions") {
    CHECK(rational_from_string("3") == 3);
    CHECK(rational_from_string("-3") == -3);
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK(rational_from_string("+5/10") == Rational(1, 2));
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(rational_from_string("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("3/"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("/4"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("a"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1 /2"), std::invalid_argument);
}

TEST_CASE("generalized binomial on rational arguments") {
    // C(a, 0) = 1, C(a, 1) = a.
    CHECK(generalized_binomial(Rational(5, 2), 0) == 1);
    CHECK(generalized_binomial(Rational(5, 2), 1) == Rational(5, 2));
    // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8.
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    // Integer arguments reduce to ordinary binomials.
    CHECK(generalized_binomial(Rational(6), 3) == 20);
    CHECK(generalized_binomial(Rational(4), 6) == 0);
    // Negative upper argument: C(-1, 3) = -1.
    CHECK(generalized_binomial(Rational(-1), 3) == -1);
}

TEST_CASE("round trip through text") {
    for (int p = -12; p <= 12; ++p) {
        for (int q = 1; q <= 9; ++q) {
            Rational r(p, q);
            r.canonicalize();
            CHECK(rational_from_string(to_string(r)) == r);
        }
    }
}
