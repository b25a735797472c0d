#include <confop/linear_ops.hpp>

#include <confop/linalg.hpp>

#include <functional>
#include <stdexcept>

namespace confop {

namespace {

// All exponent vectors over nvars slots with total degree <= max_total.
void for_each_exponent(int nvars, int max_total,
                       const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> exps(nvars, 0);
    std::function<void(int, int)> rec = [&](int slot, int budget) {
        if (slot == nvars) {
            visit(exps);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            exps[slot] = e;
            rec(slot + 1, budget - e);
        }
        exps[slot] = 0;
    };
    rec(0, max_total);
}

Monomial build_monomial(Family fam, const std::vector<int>& exps, Monomial base = {}) {
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0)
            base = Monomial::mul(base, Monomial(Variable{fam, static_cast<int>(i) + 1}, exps[i]));
    }
    return base;
}

}  // namespace

std::pair<Weight, Weight> admissible_linear_weights(int k, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("order index must be >= 0");
    return {Rational(n - 2 * k, 2 * n), Rational(n + 2 * k, 2 * n)};
}

ResidualReport check_linear_invariance(int k, const LinearContext& ctx) {
    if (k < 0) throw std::invalid_argument("order index must be >= 0");
    const SymbolPoly candidate = contraction_power_product(k, 0, 0, ctx.sig);
    ResidualReport report;
    for (const Generator& gen : conformal_basis(ctx.sig)) {
        report.entries.push_back({gen, act_linear(gen, ctx, candidate)});
    }
    return report;
}

int LinearOperatorSymbol::order() const {
    if (coefficients.empty()) return -1;
    return 2 * coefficients.rbegin()->first;
}

SymbolPoly LinearOperatorSymbol::to_poly() const {
    SymbolPoly p = SymbolPoly::zero(ctx.sig.n());
    for (const auto& [k, c] : coefficients) {
        p += c * contraction_power_product(k, 0, 0, ctx.sig);
    }
    return p;
}

std::vector<LinearOperatorSymbol> classify_linear(const LinearContext& ctx, int k_max,
                                                  int x_degree_bound) {
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    if (x_degree_bound < 0) throw std::invalid_argument("x degree bound must be >= 0");
    const Signature& sig = ctx.sig;
    const int n = sig.n();

    // General ansatz: every monomial x^a xi^b within the degree box.
    std::vector<SymbolPoly> basis;
    for_each_exponent(n, x_degree_bound, [&](const std::vector<int>& xe) {
        const Monomial xpart = build_monomial(Family::X, xe);
        for_each_exponent(n, 2 * k_max, [&](const std::vector<int>& xie) {
            basis.push_back(
                SymbolPoly::monomial(n, build_monomial(Family::Xi, xie, xpart), 1));
        });
    });

    // Constraint order: the dilation eigen-slice and the translation peels
    // collapse the basis before rotations and inversions go dense.
    std::vector<Generator> ordered;
    ordered.push_back(Generator::dilation(sig));
    for (int i = 1; i <= n; ++i) ordered.push_back(Generator::translation(sig, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ordered.push_back(Generator::rotation(sig, i, j));
    for (int i = 1; i <= n; ++i) ordered.push_back(Generator::inversion(sig, i));

    std::vector<SymbolPoly> kernel = std::move(basis);
    for (const Generator& gen : ordered) {
        if (kernel.empty()) break;
        kernel = restrict_kernel(
            kernel, [&](const SymbolPoly& p) { return act_linear(gen, ctx, p); });
    }

    // Decompose each survivor over {R_xixi^k}.
    const Rational g11 = metric_entry(sig, 1, 1);
    std::vector<LinearOperatorSymbol> result;
    for (const SymbolPoly& p : kernel) {
        LinearOperatorSymbol sym{ctx, {}};
        SymbolPoly reassembled = SymbolPoly::zero(n);
        for (int k = 0; k <= k_max; ++k) {
            const Monomial probe(var_xi(1), 2 * k);
            Rational ck = p.coefficient(probe);
            for (int j = 0; j < k; ++j) ck /= g11;
            if (ck != 0) {
                sym.coefficients[k] = ck;
                reassembled += ck * contraction_power_product(k, 0, 0, sig);
            }
        }
        if (reassembled != p)
            throw std::logic_error("invariant symbol escapes the reduced ansatz");
        // Normalize the top coefficient to one for a deterministic basis.
        if (!sym.coefficients.empty()) {
            const Rational top = sym.coefficients.rbegin()->second;
            for (auto& [k, c] : sym.coefficients) c /= top;
        }
        result.push_back(std::move(sym));
    }
    return result;
}

}  // namespace confop
