#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confop/oracle.hpp>

using namespace confop;

namespace {

BilinearOperator multiplication_operator(const Signature& sig, const Weight& lambda,
                                         const Weight& mu) {
    BilinearOperator b;
    b.ctx = {sig, lambda, mu, lambda + mu};
    b.table.k = 0;
    b.table.entries[{0, 0, 0}] = Rational(1);
    return b;
}

BilinearOperator single_contraction(const Signature& sig, int r, int s, int t) {
    const Weight lambda(2, 7);
    const Weight mu(3, 7);
    BilinearOperator b;
    const int k = r + s + t;
    b.ctx = {sig, lambda, mu, target_weight(lambda, mu, k, sig.n())};
    b.table.k = k;
    b.table.entries[{r, s, t}] = Rational(1);
    return b;
}

// Per-generator agreement between the symbolic residuals and the pairwise
// operator realization of the defining identity, at the determining degree.
void check_equivalence(const BilinearOperator& b) {
    const ResidualReport report = verify_invariance(b);
    BilinearApplier applier(b);
    const int d = 2 * b.table.k + 2;
    for (const auto& entry : report.entries) {
        const bool symbolic_zero = entry.residual.is_zero();
        const bool pairwise_zero = oracle_residual(applier, entry.gen, d).empty();
        CHECK_MESSAGE(symbolic_zero == pairwise_zero,
                      "disagreement for ", entry.gen.str(), ": symbolic ",
                      symbolic_zero ? "zero" : "nonzero", ", pairwise ",
                      pairwise_zero ? "zero" : "nonzero");
    }
}

}  // namespace

TEST_CASE("zeroth-order table multiplies densities") {
    const Signature sig{2, 0};
    const BilinearOperator b = multiplication_operator(sig, Weight(1, 3), Weight(1, 5));
    const DensityPoly f{parse_poly("x1^2 + 2*x2", 2), Weight(1, 3)};
    const DensityPoly g{parse_poly("3*x1 - 1/2", 2), Weight(1, 5)};
    const DensityPoly h = apply_bilinear(b, f, g);
    CHECK(h.coeff == f.coeff * g.coeff);
    CHECK(h.weight == Weight(1, 3) + Weight(1, 5));
}

TEST_CASE("double contraction on the first slot is its Laplacian") {
    const Signature sig{2, 0};
    const BilinearOperator b = single_contraction(sig, 1, 0, 0);
    const DensityPoly f{parse_poly("x1^2", 2), b.ctx.lambda};
    const DensityPoly g{SymbolPoly::constant(2, 1), b.ctx.mu};
    CHECK(apply_bilinear(b, f, g).coeff == SymbolPoly::constant(2, 2));
}

TEST_CASE("mixed contraction pairs one derivative of each argument") {
    const Signature sig{1, 1};
    const BilinearOperator b = single_contraction(sig, 0, 1, 0);
    const DensityPoly one_x1{parse_poly("x1", 2), b.ctx.lambda};
    const DensityPoly one_x2{parse_poly("x2", 2), b.ctx.mu};
    // The cross term dies: each summand has a vanishing derivative factor.
    CHECK(apply_bilinear(b, one_x1, {one_x2.coeff, b.ctx.mu}).coeff.is_zero());
    // Diagonal terms pick up the metric signs +1 and -1.
    CHECK(apply_bilinear(b, one_x1, {one_x1.coeff, b.ctx.mu}).coeff ==
          SymbolPoly::constant(2, 1));
    CHECK(apply_bilinear(b, {one_x2.coeff, b.ctx.lambda}, one_x2).coeff ==
          SymbolPoly::constant(2, -1));
}

TEST_CASE("double contraction on the second slot differentiates the second argument") {
    const Signature sig{1, 1};
    const BilinearOperator b = single_contraction(sig, 0, 0, 1);
    const DensityPoly f{parse_poly("x1^3", 2), b.ctx.lambda};
    const DensityPoly g{parse_poly("x1^2 + x2^2", 2), b.ctx.mu};
    // Lorentz trace of the squared radius vanishes; f rides along untouched.
    CHECK(apply_bilinear(b, f, g).coeff.is_zero());
    const DensityPoly h{parse_poly("x1^2 + 3*x2^2", 2), b.ctx.mu};
    CHECK(apply_bilinear(b, f, h).coeff == Rational(-4) * f.coeff);
}

TEST_CASE("argument weights must match the operator") {
    const Signature sig{2, 0};
    const BilinearOperator b = multiplication_operator(sig, Weight(1, 3), Weight(1, 5));
    const DensityPoly good_f{SymbolPoly::constant(2, 1), Weight(1, 3)};
    const DensityPoly good_g{SymbolPoly::constant(2, 1), Weight(1, 5)};
    CHECK_THROWS_AS(apply_bilinear(b, {good_f.coeff, Weight(1, 4)}, good_g),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_bilinear(b, good_f, {good_g.coeff, Weight(0)}),
                    std::invalid_argument);
}

TEST_CASE("momentum variables are rejected in density coefficients") {
    const Signature sig{2, 0};
    BilinearApplier applier(multiplication_operator(sig, Weight(0), Weight(0)));
    const SymbolPoly bad = SymbolPoly::variable(2, var_xi(1));
    CHECK_THROWS_AS(applier.apply(bad, SymbolPoly::constant(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(apply_linear(1, sig, DensityPoly{bad, Weight(0)}), std::invalid_argument);
}

TEST_CASE("metric Laplacian of the squared radius") {
    const DensityPoly f{parse_poly("x1^2 + x2^2", 2), Weight(0)};
    CHECK(apply_linear(1, Signature{2, 0}, f).coeff == SymbolPoly::constant(2, 4));
    CHECK(apply_linear(1, Signature{1, 1}, f).coeff.is_zero());
}

TEST_CASE("fourth-order operator kills cubics") {
    for (const Signature& sig : {Signature{2, 0}, Signature{1, 1}, Signature{3, 0}}) {
        const int n = sig.n();
        SymbolPoly cubic = SymbolPoly::constant(n, 5);
        for (int i = 1; i <= n; ++i) {
            cubic += SymbolPoly::monomial(n, Monomial(var_x(i), 3), Rational(i));
            cubic += Rational(2) * SymbolPoly::variable(n, var_x(1)) *
                     SymbolPoly::variable(n, var_x(i));
        }
        CHECK(apply_linear(2, sig, DensityPoly{cubic, Weight(1, 2)}).coeff.is_zero());
    }
}

TEST_CASE("linear application shifts the weight by 2k/n") {
    const DensityPoly f{parse_poly("x1^4", 2), Weight(-1, 2)};
    const DensityPoly image = apply_linear(2, Signature{2, 0}, f);
    CHECK(image.coeff == SymbolPoly::constant(2, 24));
    CHECK(image.weight == Weight(-1, 2) + Rational(2));
    // Order zero is the identity.
    const DensityPoly same = apply_linear(0, Signature{2, 0}, f);
    CHECK(same.coeff == f.coeff);
    CHECK(same.weight == f.weight);
}

TEST_CASE("application is bilinear in both arguments") {
    const Signature sig{1, 1};
    const BilinearOperator b = construct_bilinear(2, Weight(2, 7), Weight(3, 7), sig);
    BilinearApplier applier(b);
    const SymbolPoly f = parse_poly("x1^2*x2 - x2^3", 2);
    const SymbolPoly h = parse_poly("x1*x2 + 2", 2);
    const SymbolPoly g = parse_poly("x1^3 + x2", 2);
    const Rational a(5, 3);
    const Rational c(-2);
    CHECK(applier.apply(a * f + c * h, g) ==
          a * applier.apply(f, g) + c * applier.apply(h, g));
    CHECK(applier.apply(g, a * f + c * h) ==
          a * applier.apply(g, f) + c * applier.apply(g, h));
}

TEST_CASE("translations leave constant densities without defect for any table") {
    const Signature sig{2, 0};
    BilinearOperator skewed = multiplication_operator(sig, Weight(1, 3), Weight(1, 5));
    skewed.ctx.nu += Rational(1, 10);  // deliberately wrong target weight
    for (int i = 1; i <= 2; ++i) {
        CHECK(oracle_residual(skewed, Generator::translation(sig, i), 0).empty());
    }
}

TEST_CASE("solved first-order table has no pairwise defect") {
    const Signature sig{2, 0};
    const BilinearOperator b = construct_bilinear(1, Weight(1, 4), Weight(1, 4), sig);
    BilinearApplier applier(b);
    for (const Generator& gen : conformal_basis(sig)) {
        CHECK_MESSAGE(oracle_residual(applier, gen, 4).empty(), gen.str());
    }
}

TEST_CASE("perturbed target weight is visible to the dilation on low-degree pairs") {
    const Signature sig{2, 0};
    BilinearOperator b = construct_bilinear(1, Weight(1, 4), Weight(1, 4), sig);
    b.ctx.nu += Rational(1, 10);
    const auto defects = oracle_residual(b, Generator::dilation(sig), 1);
    REQUIRE(!defects.empty());
    bool found = false;
    const Monomial x1(var_x(1));
    for (const auto& defect : defects) {
        if (defect.f == x1 && defect.g == x1) found = true;
    }
    CHECK(found);
}

TEST_CASE("pairwise defects agree with symbolic residuals at the determining degree") {
    // Solved tables: every generator must be clean on both sides.
    check_equivalence(construct_bilinear(1, Weight(2, 7), Weight(3, 7), Signature{2, 0}));
    check_equivalence(construct_bilinear(1, Weight(-4, 7), Weight(5, 7), Signature{1, 1}));
    check_equivalence(construct_bilinear(2, Weight(2, 7), Weight(3, 7), Signature{1, 1}));
    check_equivalence(construct_bilinear(1, Weight(1, 7), Weight(2, 7), Signature{2, 1}));

    // A corrupted coefficient keeps the affine generators and the dilation
    // clean but must trip the inversions on both sides in the same way.
    BilinearOperator corrupted = construct_bilinear(2, Weight(2, 7), Weight(3, 7), Signature{2, 0});
    corrupted.table.entries[{2, 0, 0}] += Rational(1, 9);
    check_equivalence(corrupted);

    // A corrupted target weight must additionally trip the dilation.
    BilinearOperator skewed = construct_bilinear(1, Weight(2, 7), Weight(3, 7), Signature{1, 1});
    skewed.ctx.nu += Rational(1, 10);
    check_equivalence(skewed);
}

TEST_CASE("iterated Laplacian intertwines the density actions at the forced weights") {
    for (const Signature& sig : {Signature{2, 0}, Signature{1, 1}, Signature{2, 1}}) {
        const int n = sig.n();
        for (int k = 1; k <= 2; ++k) {
            const LinearContext ctx{sig, Weight(n - 2 * k, 2 * n), Weight(n + 2 * k, 2 * n)};
            for (const Generator& gen : conformal_basis(sig)) {
                CHECK_MESSAGE(linear_oracle_residual(k, ctx, gen, 2 * k + 2).empty(),
                              gen.str(), " n=", n, " k=", k);
            }
        }
    }
}

TEST_CASE("iterated Laplacian fails to intertwine at shifted weights") {
    const Signature sig{2, 0};
    const LinearContext ctx{sig, Weight(0) + Rational(1, 10), Weight(1) + Rational(1, 10)};
    const auto defects = linear_oracle_residual(1, ctx, Generator::inversion(sig, 1), 4);
    CHECK(!defects.empty());
}
