#include <confop/oracle.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace confop {

namespace {

void check_coefficient_poly(const SymbolPoly& f, const char* which) {
    if (f.involves(Family::Xi) || f.involves(Family::Eta)) {
        throw std::invalid_argument(std::string(which) +
                                    " must involve only x-variables");
    }
}

// r metric traces on F, t on G, s single derivatives of each paired through
// the metric. Partial derivatives commute, so peeling one contraction at a
// time is exact.
SymbolPoly contract(int r, int s, int t, const SymbolPoly& F, const SymbolPoly& G,
                    const Signature& sig) {
    const int n = sig.n();
    SymbolPoly sum = SymbolPoly::zero(F.dim());
    if (r > 0) {
        for (int a = 1; a <= n; ++a) {
            const SymbolPoly dF = F.diff(var_x(a)).diff(var_x(a));
            if (dF.is_zero()) continue;
            sum += metric_entry(sig, a, a) * contract(r - 1, s, t, dF, G, sig);
        }
        return sum;
    }
    if (t > 0) {
        for (int a = 1; a <= n; ++a) {
            const SymbolPoly dG = G.diff(var_x(a)).diff(var_x(a));
            if (dG.is_zero()) continue;
            sum += metric_entry(sig, a, a) * contract(r, s, t - 1, F, dG, sig);
        }
        return sum;
    }
    if (s > 0) {
        for (int a = 1; a <= n; ++a) {
            const SymbolPoly dF = F.diff(var_x(a));
            if (dF.is_zero()) continue;
            const SymbolPoly dG = G.diff(var_x(a));
            if (dG.is_zero()) continue;
            sum += metric_entry(sig, a, a) * contract(r, s - 1, t, dF, dG, sig);
        }
        return sum;
    }
    return F * G;
}

// All x-monomials of total degree <= bound in n variables, in monomial order.
std::vector<Monomial> x_monomials(int n, int bound) {
    std::vector<Monomial> out;
    if (bound < 0) return out;
    Monomial current;
    auto recurse = [&](auto&& self, int index, int remaining, const Monomial& mono) -> void {
        if (index > n) {
            out.push_back(mono);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            self(self, index + 1, remaining - e, Monomial::mul(mono, Monomial(var_x(index), e)));
        }
    };
    recurse(recurse, 1, bound, current);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SymbolPoly BilinearApplier::apply_monomials(const Monomial& f, const Monomial& g) {
    const auto key = std::make_pair(f, g);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Signature& sig = op_.ctx.sig;
    const int n = sig.n();
    const SymbolPoly F = SymbolPoly::monomial(n, f, Rational(1));
    const SymbolPoly G = SymbolPoly::monomial(n, g, Rational(1));
    SymbolPoly result = SymbolPoly::zero(n);
    for (const auto& [mono, c] : op_.table.entries) {
        result += c * contract(mono.r, mono.s, mono.t, F, G, sig);
    }
    cache_.emplace(key, result);
    return result;
}

SymbolPoly BilinearApplier::apply(const SymbolPoly& f, const SymbolPoly& g) {
    check_coefficient_poly(f, "first argument");
    check_coefficient_poly(g, "second argument");
    const int n = op_.ctx.sig.n();
    if (f.dim() != n || g.dim() != n) {
        throw std::invalid_argument("argument dimension does not match the operator");
    }
    SymbolPoly result = SymbolPoly::zero(n);
    for (const auto& [fm, fc] : f.terms()) {
        for (const auto& [gm, gc] : g.terms()) {
            result += (fc * gc) * apply_monomials(fm, gm);
        }
    }
    return result;
}

DensityPoly apply_bilinear(const BilinearOperator& b, const DensityPoly& f,
                           const DensityPoly& g) {
    if (f.weight != b.ctx.lambda) {
        throw std::invalid_argument("first argument weight does not match the operator");
    }
    if (g.weight != b.ctx.mu) {
        throw std::invalid_argument("second argument weight does not match the operator");
    }
    BilinearApplier applier(b);
    return DensityPoly{applier.apply(f.coeff, g.coeff), b.ctx.nu};
}

DensityPoly apply_linear(int k, const Signature& sig, const DensityPoly& f) {
    if (k < 0) throw std::invalid_argument("negative operator order");
    check_coefficient_poly(f.coeff, "argument");
    const int n = sig.n();
    if (f.coeff.dim() != n) {
        throw std::invalid_argument("argument dimension does not match the signature");
    }
    SymbolPoly coeff = f.coeff;
    for (int step = 0; step < k; ++step) {
        SymbolPoly next = SymbolPoly::zero(n);
        for (int a = 1; a <= n; ++a) {
            next += metric_entry(sig, a, a) * coeff.diff(var_x(a)).diff(var_x(a));
        }
        coeff = next;
    }
    return DensityPoly{coeff, f.weight + Rational(2 * k, n)};
}

std::vector<OracleResidual> oracle_residual(BilinearApplier& applier, const Generator& gen,
                                            int degree_bound) {
    const BilinearContext& ctx = applier.op().ctx;
    if (!(gen.sig() == ctx.sig)) {
        throw std::invalid_argument("generator signature does not match the operator");
    }
    const int n = ctx.sig.n();
    const std::vector<Monomial> monos = x_monomials(n, degree_bound);

    // Lie derivatives of each monomial density, hoisted out of the pair loop.
    std::map<Monomial, SymbolPoly> lie_first;
    std::map<Monomial, SymbolPoly> lie_second;
    for (const Monomial& m : monos) {
        const SymbolPoly p = SymbolPoly::monomial(n, m, Rational(1));
        lie_first.emplace(m, lie_derivative_density(gen, ctx.lambda, p));
        lie_second.emplace(m, lie_derivative_density(gen, ctx.mu, p));
    }

    std::vector<OracleResidual> defects;
    for (const Monomial& f : monos) {
        const SymbolPoly F = SymbolPoly::monomial(n, f, Rational(1));
        for (const Monomial& g : monos) {
            const SymbolPoly G = SymbolPoly::monomial(n, g, Rational(1));
            SymbolPoly residual =
                lie_derivative_density(gen, ctx.nu, applier.apply(F, G));
            residual -= applier.apply(lie_first.at(f), G);
            residual -= applier.apply(F, lie_second.at(g));
            if (!residual.is_zero()) defects.push_back({f, g, residual});
        }
    }
    return defects;
}

std::vector<OracleResidual> oracle_residual(const BilinearOperator& b, const Generator& gen,
                                            int degree_bound) {
    BilinearApplier applier(b);
    return oracle_residual(applier, gen, degree_bound);
}

std::vector<LinearOracleResidual> linear_oracle_residual(int k, const LinearContext& ctx,
                                                         const Generator& gen,
                                                         int degree_bound) {
    if (!(gen.sig() == ctx.sig)) {
        throw std::invalid_argument("generator signature does not match the context");
    }
    const int n = ctx.sig.n();
    std::vector<LinearOracleResidual> defects;
    for (const Monomial& f : x_monomials(n, degree_bound)) {
        const SymbolPoly F = SymbolPoly::monomial(n, f, Rational(1));
        const DensityPoly image = apply_linear(k, ctx.sig, DensityPoly{F, ctx.lambda});
        SymbolPoly residual = lie_derivative_density(gen, ctx.mu, image.coeff);
        const SymbolPoly lf = lie_derivative_density(gen, ctx.lambda, F);
        residual -= apply_linear(k, ctx.sig, DensityPoly{lf, ctx.lambda}).coeff;
        if (!residual.is_zero()) defects.push_back({f, residual});
    }
    return defects;
}

}  // namespace confop
