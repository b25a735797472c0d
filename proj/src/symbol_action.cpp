#include <confop/symbol_action.hpp>

#include <stdexcept>

namespace confop {

namespace {

void check_dim(const Generator& gen, const Signature& sig, const SymbolPoly& p) {
    if (gen.sig() != sig) throw std::invalid_argument("generator/context signature mismatch");
    if (p.dim() != sig.n()) throw std::invalid_argument("symbol dimension mismatch");
}

Variable momentum(Family fam, int index) { return Variable{fam, index}; }

// Trace operator for one momentum family: g^{jj} d^2/d fam_j^2.
SymbolPoly trace_term(const SymbolPoly& p, Family fam, const Signature& sig) {
    SymbolPoly result = SymbolPoly::zero(p.dim());
    for (int j = 1; j <= sig.n(); ++j) {
        const Variable v = momentum(fam, j);
        result += metric_entry(sig, j, j) * p.diff(v).diff(v);
    }
    return result;
}

// Euler operator for one momentum family: fam_j d/d fam_j.
SymbolPoly euler_term(const SymbolPoly& p, Family fam, const Signature& sig) {
    SymbolPoly result = SymbolPoly::zero(p.dim());
    for (int j = 1; j <= sig.n(); ++j) {
        const Variable v = momentum(fam, j);
        result += SymbolPoly::variable(p.dim(), v) * p.diff(v);
    }
    return result;
}

// Correction terms beyond the lift for the i-th inversion, one momentum
// family at a time: -fam_i T(P) + 2 (E + n w) d^{fam_i} P, where the raised
// derivative d^{fam_i} = g_{ii} d_{fam_i} is applied before the Euler
// operator.
SymbolPoly inversion_corrections(const SymbolPoly& p, Family fam, int i,
                                 const Weight& w, const Signature& sig) {
    const int n = sig.n();
    SymbolPoly result = SymbolPoly::zero(p.dim());
    result -= SymbolPoly::variable(p.dim(), momentum(fam, i)) * trace_term(p, fam, sig);
    const SymbolPoly raised = metric_entry(sig, i, i) * p.diff(momentum(fam, i));
    result += 2 * (euler_term(raised, fam, sig) + n * w * raised);
    return result;
}

}  // namespace

SymbolPoly cotangent_lift(const Generator& gen, const Rational& delta,
                          const SymbolPoly& p, bool with_eta) {
    const Signature& sig = gen.sig();
    const int n = sig.n();
    if (p.dim() != n) throw std::invalid_argument("symbol dimension mismatch");

    const std::vector<SymbolPoly> comp = generator_components(gen);
    SymbolPoly result = SymbolPoly::zero(n);
    for (int k = 1; k <= n; ++k) result += comp[k - 1] * p.diff(var_x(k));

    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            const SymbolPoly jac = comp[a - 1].diff(var_x(b));
            if (jac.is_zero()) continue;
            SymbolPoly drag =
                SymbolPoly::variable(n, var_xi(a)) * p.diff(var_xi(b));
            if (with_eta)
                drag += SymbolPoly::variable(n, var_eta(a)) * p.diff(var_eta(b));
            result -= jac * drag;
        }
    }

    result += delta * generator_divergence(gen) * p;
    return result;
}

SymbolPoly act_linear(const Generator& gen, const LinearContext& ctx, const SymbolPoly& p) {
    check_dim(gen, ctx.sig, p);
    if (p.involves(Family::Eta))
        throw std::invalid_argument("linear symbol must not involve eta-variables");

    SymbolPoly result = cotangent_lift(gen, ctx.delta(), p, /*with_eta=*/false);
    if (gen.kind() == Generator::Kind::Inversion)
        result += inversion_corrections(p, Family::Xi, gen.i(), ctx.lambda, ctx.sig);
    return result;
}

SymbolPoly act_bilinear(const Generator& gen, const BilinearContext& ctx, const SymbolPoly& p) {
    check_dim(gen, ctx.sig, p);

    SymbolPoly result = cotangent_lift(gen, ctx.delta(), p, /*with_eta=*/true);
    if (gen.kind() == Generator::Kind::Inversion) {
        result += inversion_corrections(p, Family::Xi, gen.i(), ctx.lambda, ctx.sig);
        result += inversion_corrections(p, Family::Eta, gen.i(), ctx.mu, ctx.sig);
    }
    return result;
}

InversionExpansion inversion_monomial_expansion(int r, int s, int t,
                                                const BilinearContext& ctx) {
    if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("negative exponent");
    const Rational n = ctx.sig.n();
    const Rational k = r + s + t;
    const Rational lam = ctx.lambda;
    const Rational mu = ctx.mu;

    InversionExpansion e;
    e.on_x = 2 * (2 * k - n * ctx.delta());
    e.on_xi_r = 2 * r * (2 * r + n * (2 * lam - 1));
    e.on_xi_s2 = Rational(-s) * (s - 1);
    e.on_xi_s = 2 * s * (s + 2 * t + n * mu - 1);
    e.on_eta_t = 2 * t * (2 * t + n * (2 * mu - 1));
    e.on_eta_s2 = Rational(-s) * (s - 1);
    e.on_eta_s = 2 * s * (s + 2 * r + n * lam - 1);
    return e;
}

bool ResidualReport::all_zero() const {
    for (const auto& e : entries) {
        if (!e.residual.is_zero()) return false;
    }
    return true;
}

std::vector<std::string> ResidualReport::offenders() const {
    std::vector<std::string> names;
    for (const auto& e : entries) {
        if (!e.residual.is_zero()) names.push_back(e.gen.str());
    }
    return names;
}

SymbolPoly inversion_expansion_poly(int r, int s, int t, int i, const BilinearContext& ctx) {
    const Signature& sig = ctx.sig;
    const int n = sig.n();
    const InversionExpansion e = inversion_monomial_expansion(r, s, t, ctx);

    const SymbolPoly x_low = metric_entry(sig, i, i) * SymbolPoly::variable(n, var_x(i));
    const SymbolPoly xi = SymbolPoly::variable(n, var_xi(i));
    const SymbolPoly eta = SymbolPoly::variable(n, var_eta(i));
    auto rst = [&](int rr, int ss, int tt) { return contraction_power_product(rr, ss, tt, sig); };

    SymbolPoly result = e.on_x * x_low * rst(r, s, t);
    if (r >= 1) result += e.on_xi_r * xi * rst(r - 1, s, t);
    if (s >= 2) result += e.on_xi_s2 * xi * rst(r, s - 2, t + 1);
    if (s >= 1) result += e.on_xi_s * xi * rst(r, s - 1, t);
    if (t >= 1) result += e.on_eta_t * eta * rst(r, s, t - 1);
    if (s >= 2) result += e.on_eta_s2 * eta * rst(r + 1, s - 2, t);
    if (s >= 1) result += e.on_eta_s * eta * rst(r, s - 1, t);
    return result;
}

}  // namespace confop
