#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confop/bilinear_ops.hpp>

#include <random>

using namespace confop;

namespace {

// Random weight guaranteed off the resonant lattice {(n-2j)/2n}: denominator
// 7 cannot appear there for n <= 3 unless the value is an integer.
Weight random_safe_weight(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 34);
    std::uniform_int_distribution<int> sign(0, 1);
    int p = num(rng);
    if (p % 7 == 0) ++p;
    return Weight(sign(rng) ? p : -p, 7);
}

bool proportional(const CoeffTable& a, const CoeffTable& b) {
    if (a.k != b.k) return false;
    if (a.entries.empty() || b.entries.empty()) return a.entries.empty() == b.entries.empty();
    if (a.entries.size() != b.entries.size()) return false;
    const auto& [m0, c0] = *a.entries.begin();
    const Rational scale = b.at(m0.r, m0.s, m0.t) / c0;
    if (scale == 0) return false;
    for (const auto& [m, c] : a.entries) {
        if (b.at(m.r, m.s, m.t) != scale * c) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("target weight accumulates the order shift") {
    CHECK(target_weight(Weight(0), Weight(0), 0, 3) == 0);
    CHECK(target_weight(Weight(1, 5), Weight(1, 7), 1, 2) == Rational(47, 35));
    CHECK(target_weight(Weight(1, 3), Weight(1, 3), 3, 3) == Rational(8, 3));
}

TEST_CASE("order zero table is the constant") {
    CoeffTable t = solve_recurrence(0, Weight(1, 3), Weight(2, 7), {2, 0});
    CHECK(t.k == 0);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.at(0, 0, 0) == 1);
}

TEST_CASE("first order table at the symmetric quarter weights") {
    CoeffTable t = solve_recurrence(1, Weight(1, 4), Weight(1, 4), {2, 0});
    CHECK(t.k == 1);
    CHECK(t.entries.size() == 3);
    CHECK(t.at(0, 1, 0) == 1);
    CHECK(t.at(1, 0, 0) == Rational(-1, 2));
    CHECK(t.at(0, 0, 1) == Rational(-1, 2));
}

TEST_CASE("resonance is detected eagerly and precisely") {
    Signature sig{2, 0};
    // lambda = 1/2 makes the factor 2 + n(2 lambda - 1) equal 2: fine.
    CHECK_NOTHROW(solve_recurrence(1, Weight(1, 2), Weight(1, 4), sig));
    // lambda = 0 makes it vanish.
    CHECK_THROWS_AS(solve_recurrence(1, Weight(0), Weight(1, 4), sig), ResonantWeightError);
    CHECK_THROWS_AS(solve_recurrence(1, Weight(1, 4), Weight(0), sig), ResonantWeightError);
    // lambda = -1 only resonates once k reaches 3 (factor 6 + n(2 lambda - 1)).
    CHECK_NOTHROW(solve_recurrence(2, Weight(-1), Weight(1, 4), sig));
    CHECK_THROWS_AS(solve_recurrence(3, Weight(-1), Weight(1, 4), sig), ResonantWeightError);
    // At n = 3 the lattice moves: lambda = 1/6 resonates, 0 does not.
    CHECK_THROWS_AS(solve_recurrence(1, Weight(1, 6), Weight(1, 4), Signature{3, 0}),
                    ResonantWeightError);
    CHECK_NOTHROW(solve_recurrence(1, Weight(0), Weight(1, 4), Signature{3, 0}));
}

TEST_CASE("printed second order coefficients") {
    CoeffTable b2 = closed_form(1, Weight(1, 4), Weight(1, 4), 2);
    CHECK(b2.at(1, 0, 0) == Rational(1, 2));
    CHECK(b2.at(0, 1, 0) == -1);
    CHECK(b2.at(0, 0, 1) == Rational(1, 2));

    CoeffTable b2b = closed_form(1, Weight(1, 5), Weight(1, 7), 2);
    CHECK(b2b.at(1, 0, 0) == Rational(8, 49));
    CHECK(b2b.at(0, 1, 0) == Rational(-16, 35));
    CHECK(b2b.at(0, 0, 1) == Rational(8, 25));

    CHECK_THROWS_AS(closed_form(3, Weight(1, 5), Weight(1, 7), 2), std::invalid_argument);
}

TEST_CASE("printed tables are symmetric in equal weights") {
    for (int k : {1, 2}) {
        CoeffTable b = closed_form(k, Weight(2, 7), Weight(2, 7), 3);
        for (const auto& [m, c] : b.entries) CHECK(b.at(m.t, m.s, m.r) == c);
    }
}

TEST_CASE("edge coefficients at pinned values") {
    CHECK(edge_coefficient(3, 0, EdgeSide::Xi, Weight(1, 5), Weight(1, 7), 2) == 1);
    CHECK(edge_coefficient(1, 1, EdgeSide::Xi, Weight(1, 4), Weight(1, 4), 2) ==
          Rational(-1, 2));
    CHECK(edge_coefficient(2, 1, EdgeSide::Xi, Weight(1, 5), Weight(1, 7), 2) ==
          Rational(-45, 14));
    CHECK_THROWS_AS(edge_coefficient(2, 1, EdgeSide::Xi, Weight(0), Weight(1, 7), 2),
                    ResonantWeightError);
    CHECK_THROWS_AS(edge_coefficient(2, 3, EdgeSide::Xi, Weight(1, 5), Weight(1, 7), 2),
                    std::invalid_argument);
}

TEST_CASE("recurrence and closed form agree up to one scalar") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;
        Signature sig{n, 0};
        Weight lam = random_safe_weight(rng);
        Weight mu = random_safe_weight(rng);
        for (int k : {1, 2}) {
            CoeffTable recur = solve_recurrence(k, lam, mu, sig);
            CoeffTable printed = closed_form(k, lam, mu, n);
            CHECK_MESSAGE(proportional(recur, printed), "k=", k, " n=", n,
                          " lambda=", to_string(lam), " mu=", to_string(mu));
        }
    }
}

TEST_CASE("recurrence matches both edge products through order eight") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 2;
        Signature sig{n, 0};
        Weight lam = random_safe_weight(rng);
        Weight mu = random_safe_weight(rng);
        for (int k = 1; k <= 4; ++k) {
            CoeffTable t = solve_recurrence(k, lam, mu, sig);
            for (int i = 0; i <= k; ++i) {
                CHECK(t.at(i, k - i, 0) == edge_coefficient(k, i, EdgeSide::Xi, lam, mu, n));
                CHECK(t.at(0, k - i, i) == edge_coefficient(k, i, EdgeSide::Eta, lam, mu, n));
            }
        }
    }
}

TEST_CASE("solved tables are symmetric when the weights coincide") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + trial % 2;
        Weight w = random_safe_weight(rng);
        for (int k = 1; k <= 4; ++k) {
            CoeffTable t = solve_recurrence(k, w, w, {n, 0});
            for (const auto& [m, c] : t.entries) CHECK(t.at(m.t, m.s, m.r) == c);
        }
    }
}

TEST_CASE("constructed operators pass symbolic invariance") {
    std::mt19937 rng(80);
    for (Signature sig : {Signature{2, 0}, Signature{1, 1}}) {
        for (int k = 0; k <= 3; ++k) {
            BilinearOperator op =
                construct_bilinear(k, random_safe_weight(rng), random_safe_weight(rng), sig);
            ResidualReport report = verify_invariance(op);
            CHECK_MESSAGE(report.all_zero(), "k=", k, " sig=(", sig.p, ",", sig.q, ")");
        }
    }
    for (Signature sig : {Signature{3, 0}, Signature{2, 1}}) {
        for (int k = 0; k <= 2; ++k) {
            BilinearOperator op =
                construct_bilinear(k, random_safe_weight(rng), random_safe_weight(rng), sig);
            CHECK(verify_invariance(op).all_zero());
        }
    }
}

TEST_CASE("wrong target weight shows up in the dilation residual") {
    Signature sig{2, 0};
    BilinearOperator op = construct_bilinear(1, Weight(1, 4), Weight(1, 4), sig);
    CHECK(op.ctx.nu == Rational(3, 2));
    op.ctx.nu += Rational(1, 10);
    ResidualReport report = verify_invariance(op);
    CHECK_FALSE(report.all_zero());
    const SymbolPoly symbol = op.table.to_poly(sig);
    for (const auto& e : report.entries) {
        if (e.gen.kind() == Generator::Kind::Dilation) {
            // (n delta - 2k) B with n delta - 2k = 1/5.
            CHECK(e.residual == Rational(1, 5) * symbol);
        }
    }
}

TEST_CASE("order zero multiplication is invariant") {
    BilinearOperator op{{Signature{2, 0}, Weight(2, 7), Weight(-3, 5), Weight(2, 7) + Rational(-3, 5)},
                        CoeffTable{0, {{{0, 0, 0}, Rational(1)}}}};
    CHECK(verify_invariance(op).all_zero());
}

TEST_CASE("classification finds the recurrence solution and nothing else") {
    Signature sig{2, 0};
    Weight lam(1, 5);
    Weight mu(1, 7);
    BilinearContext ctx{sig, lam, mu, target_weight(lam, mu, 1, 2)};
    auto basis = classify_bilinear(ctx, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == solve_recurrence(1, lam, mu, sig));
}

TEST_CASE("half-integer homogeneity admits nothing") {
    Signature sig{2, 0};
    Weight lam(1, 5);
    Weight mu(1, 7);
    BilinearContext ctx{sig, lam, mu, lam + mu + Rational(1, 2)};
    CHECK(classify_bilinear(ctx, 2).empty());
}

TEST_CASE("matched weights admit the constants") {
    Signature sig{2, 0};
    Weight lam(3, 7);
    Weight mu(-2, 5);
    BilinearContext ctx{sig, lam, mu, lam + mu};
    auto basis = classify_bilinear(ctx, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].k == 0);
    CHECK(basis[0].at(0, 0, 0) == 1);
}

TEST_CASE("classification dimension across the homogeneity ladder") {
    std::mt19937 rng(81);
    for (int n : {2, 3}) {
        Signature sig{n, 0};
        Weight lam = random_safe_weight(rng);
        Weight mu = random_safe_weight(rng);
        const int k_max = 3;
        for (int k = 0; k <= k_max; ++k) {
            BilinearContext on{sig, lam, mu, target_weight(lam, mu, k, n)};
            auto basis = classify_bilinear(on, k_max);
            REQUIRE_MESSAGE(basis.size() == 1, "n=", n, " k=", k);
            CHECK(basis[0] == solve_recurrence(k, lam, mu, sig));

            BilinearContext off{sig, lam, mu, lam + mu + Rational(2 * k + 1, n)};
            CHECK(classify_bilinear(off, k_max).empty());
        }
    }
}
