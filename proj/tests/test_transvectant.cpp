#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confop/transvectant.hpp>

#include <random>

using namespace confop;

namespace {

Poly1D random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    const int degree = degree_dist(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.emplace_back(coeff_dist(rng));
    return Poly1D(std::move(coeffs));
}

Weight random_weight(std::mt19937& rng) {
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 9);
    return Weight(Rational(num_dist(rng), den_dist(rng)));
}

}  // namespace

TEST_CASE("univariate polynomials stay canonical under arithmetic") {
    const Poly1D p({Rational(1), Rational(2)});       // 1 + 2x
    const Poly1D q({Rational(-1), Rational(-2)});     // -(1 + 2x)
    CHECK((p + q).is_zero());
    CHECK((p + q).degree() == -1);
    CHECK(Poly1D({Rational(3), Rational(0), Rational(0)}).degree() == 0);
    CHECK(p * q == Poly1D({Rational(-1), Rational(-4), Rational(-4)}));
    CHECK(-p == q);
    CHECK(p.coefficient(1) == 2);
    CHECK(p.coefficient(7) == 0);
    CHECK((Rational(1, 2) * p).coefficient(0) == Rational(1, 2));
    CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("derivatives lower the degree and kill constants") {
    const Poly1D cubic({Rational(5), Rational(0), Rational(0), Rational(2)});  // 5 + 2x^3
    CHECK(cubic.derivative() == Poly1D({Rational(0), Rational(0), Rational(6)}));
    CHECK(cubic.derivative(3) == Poly1D::constant(Rational(12)));
    CHECK(cubic.derivative(4).is_zero());
    CHECK(Poly1D::constant(Rational(7)).derivative().is_zero());
}

TEST_CASE("polynomial rendering") {
    CHECK(Poly1D().str() == "0");
    CHECK(Poly1D::monomial(2, Rational(-1, 2)).str() == "-1/2*x^2");
    CHECK(Poly1D({Rational(1), Rational(-1), Rational(3)}).str() == "3*x^2 - x + 1");
}

TEST_CASE("order zero and one coefficient tables") {
    CHECK(transvectant_coefficients(0, Weight(2, 3), Weight(-1, 5)) ==
          std::vector<Rational>{Rational(1)});
    const Weight lambda(3, 7);
    const Weight mu(-2, 5);
    CHECK(transvectant_coefficients(1, lambda, mu) ==
          std::vector<Rational>{Rational(2) * lambda, Rational(-2) * mu});
    // Half-densities: the Wronskian.
    CHECK(transvectant_coefficients(1, Weight(1, 2), Weight(1, 2)) ==
          std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("Wronskian of x and x squared") {
    const Poly1D result = apply_transvectant(1, Weight(1, 2), Weight(1, 2),
                                             Poly1D::monomial(1), Poly1D::monomial(2));
    CHECK(result == Poly1D::monomial(2));
}

TEST_CASE("first-order bracket of a density with itself") {
    std::mt19937 rng(411);
    for (int trial = 0; trial < 10; ++trial) {
        const Weight lambda = random_weight(rng);
        const Weight mu = random_weight(rng);
        const Poly1D f = random_poly(rng, 5);
        const Poly1D expected = (2 * lambda - 2 * mu) * (f * f.derivative());
        CHECK(apply_transvectant(1, lambda, mu, f, f) == expected);
    }
}

TEST_CASE("second-order bracket of the half-density x squared with itself") {
    // Coefficient table [1, -4, 1] on [f g'', f' g', f'' g] at lambda = mu = 1/2:
    // x^2*2 - 4*(2x)(2x) + 2*x^2 = -12 x^2.
    CHECK(transvectant_coefficients(2, Weight(1, 2), Weight(1, 2)) ==
          std::vector<Rational>{Rational(1), Rational(-4), Rational(1)});
    const Poly1D square = Poly1D::monomial(2);
    CHECK(apply_transvectant(2, Weight(1, 2), Weight(1, 2), square, square) ==
          Poly1D::monomial(2, Rational(-12)));
}

TEST_CASE("bracket degree drops by the order") {
    std::mt19937 rng(517);
    for (int trial = 0; trial < 20; ++trial) {
        const Weight lambda = random_weight(rng);
        const Weight mu = random_weight(rng);
        const Poly1D f = random_poly(rng, 6);
        const Poly1D g = random_poly(rng, 6);
        for (int k = 0; k <= 4; ++k) {
            const Poly1D result = apply_transvectant(k, lambda, mu, f, g);
            if (f.is_zero() || g.is_zero()) {
                CHECK(result.is_zero());
            } else {
                // The zero polynomial satisfies the bound vacuously.
                CHECK((result.is_zero() || result.degree() <= f.degree() + g.degree() - k));
            }
        }
    }
}

TEST_CASE("equal weights give parity symmetry under swapping the arguments") {
    std::mt19937 rng(613);
    for (int trial = 0; trial < 10; ++trial) {
        const Weight lambda = random_weight(rng);
        const Poly1D f = random_poly(rng, 5);
        const Poly1D g = random_poly(rng, 5);
        for (int k = 0; k <= 4; ++k) {
            Poly1D swapped = apply_transvectant(k, lambda, lambda, g, f);
            if (k % 2 == 1) swapped = -swapped;
            CHECK(apply_transvectant(k, lambda, lambda, f, g) == swapped);
        }
    }
}

TEST_CASE("projective vector fields and the one-dimensional density action") {
    const std::vector<Poly1D> basis = sl2_basis();
    REQUIRE(basis.size() == 3);
    CHECK(sl2_name(basis[0]) == "d/dx");
    CHECK(sl2_name(basis[1]) == "x d/dx");
    CHECK(sl2_name(basis[2]) == "x^2 d/dx");
    // x^2 d/dx on the weight-lambda density x^p: x^2 p x^{p-1} + 2 lambda x x^p.
    const Weight lambda(1, 3);
    const Poly1D f = Poly1D::monomial(4);
    CHECK(lie_derivative_1d(basis[2], lambda, f) ==
          Poly1D::monomial(5, Rational(4) + 2 * lambda));
    CHECK(lie_derivative_1d(basis[0], lambda, f) == Poly1D::monomial(3, Rational(4)));
}

TEST_CASE("multiplication of densities is invariant") {
    const Sl2Report report = sl2_residual(0, Weight(2, 7), Weight(-1, 3));
    CHECK(report.all_zero());
    CHECK(report.offenders().empty());
}

TEST_CASE("classical brackets are invariant for random weights up to order five") {
    std::mt19937 rng(719);
    for (int trial = 0; trial < 10; ++trial) {
        const Weight lambda = random_weight(rng);
        const Weight mu = random_weight(rng);
        for (int k = 0; k <= 5; ++k) {
            const Sl2Report report = sl2_residual(k, lambda, mu);
            CHECK_MESSAGE(report.all_zero(), "k=", k, " lambda=", to_string(lambda),
                          " mu=", to_string(mu));
        }
    }
    // The quoted classical instance.
    CHECK(sl2_residual(2, Weight(1, 4), Weight(1, 4)).all_zero());
}

TEST_CASE("iterated derivative is invariant exactly at the forced weight") {
    for (int k = 0; k <= 5; ++k) {
        const Weight forced(1 - k, 2);
        CHECK(derivative_residual(k, forced, 2 * k + 2).empty());
        if (k > 0) {
            const auto defects = derivative_residual(k, forced + Rational(1, 5), 2 * k + 2);
            CHECK(!defects.empty());
        }
    }
    // Wrong weight for the second derivative: the quadratic field objects.
    const auto defects = derivative_residual(2, Weight(0), 6);
    REQUIRE(!defects.empty());
    bool quadratic_offender = false;
    for (const auto& defect : defects) {
        if (defect.generator == "x^2 d/dx") quadratic_offender = true;
        CHECK(defect.check == "derivative");
    }
    CHECK(quadratic_offender);
}
