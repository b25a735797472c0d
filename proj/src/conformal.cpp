#include <confop/conformal.hpp>

#include <stdexcept>

namespace confop {

namespace {

void check_index(const Signature& sig, int i) {
    if (i < 1 || i > sig.n()) throw std::out_of_range("index out of range 1..n");
}

// x_i = g_{ii} x^i as a polynomial.
SymbolPoly lowered_x(const Signature& sig, int i) {
    return metric_entry(sig, i, i) * SymbolPoly::variable(sig.n(), var_x(i));
}

}  // namespace

Rational metric_entry(const Signature& sig, int i, int j) {
    check_index(sig, i);
    check_index(sig, j);
    if (i != j) return 0;
    return i <= sig.p ? 1 : -1;
}

Generator Generator::translation(const Signature& sig, int i) {
    check_index(sig, i);
    return Generator(Kind::Translation, sig, i, 0);
}

Generator Generator::rotation(const Signature& sig, int i, int j) {
    check_index(sig, i);
    check_index(sig, j);
    if (i >= j) throw std::invalid_argument("rotation requires i < j");
    return Generator(Kind::Rotation, sig, i, j);
}

Generator Generator::dilation(const Signature& sig) {
    if (sig.n() < 1) throw std::invalid_argument("dimension must be >= 1");
    return Generator(Kind::Dilation, sig, 0, 0);
}

Generator Generator::inversion(const Signature& sig, int i) {
    check_index(sig, i);
    return Generator(Kind::Inversion, sig, i, 0);
}

std::string Generator::str() const {
    switch (kind_) {
        case Kind::Translation: return "Translation(" + std::to_string(i_) + ")";
        case Kind::Rotation:
            return "Rotation(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
        case Kind::Dilation: return "Dilation";
        case Kind::Inversion: return "Inversion(" + std::to_string(i_) + ")";
    }
    return "?";
}

std::vector<Generator> conformal_basis(const Signature& sig) {
    const int n = sig.n();
    std::vector<Generator> basis;
    basis.reserve(2 * n + n * (n - 1) / 2 + 1);
    for (int i = 1; i <= n; ++i) basis.push_back(Generator::translation(sig, i));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) basis.push_back(Generator::rotation(sig, i, j));
    }
    basis.push_back(Generator::dilation(sig));
    for (int i = 1; i <= n; ++i) basis.push_back(Generator::inversion(sig, i));
    return basis;
}

std::vector<SymbolPoly> generator_components(const Generator& gen) {
    const Signature& sig = gen.sig();
    const int n = sig.n();
    std::vector<SymbolPoly> comp(n, SymbolPoly::zero(n));
    switch (gen.kind()) {
        case Generator::Kind::Translation:
            comp[gen.i() - 1] = SymbolPoly::constant(n, 1);
            break;
        case Generator::Kind::Rotation:
            // x_i d_j - x_j d_i.
            comp[gen.j() - 1] = lowered_x(sig, gen.i());
            comp[gen.i() - 1] = -lowered_x(sig, gen.j());
            break;
        case Generator::Kind::Dilation:
            for (int k = 1; k <= n; ++k) comp[k - 1] = SymbolPoly::variable(n, var_x(k));
            break;
        case Generator::Kind::Inversion: {
            // x_j x^j d_i - 2 x_i x^j d_j.
            const SymbolPoly xx = euclidean_invariant(Contraction::XX, sig);
            const SymbolPoly xi_low = lowered_x(sig, gen.i());
            for (int k = 1; k <= n; ++k) {
                comp[k - 1] = -2 * xi_low * SymbolPoly::variable(n, var_x(k));
            }
            comp[gen.i() - 1] += xx;
            break;
        }
    }
    return comp;
}

SymbolPoly generator_divergence(const Generator& gen) {
    const std::vector<SymbolPoly> comp = generator_components(gen);
    SymbolPoly div = SymbolPoly::zero(gen.sig().n());
    for (int k = 1; k <= gen.sig().n(); ++k) div += comp[k - 1].diff(var_x(k));
    return div;
}

SymbolPoly lie_derivative_density(const Generator& gen, const Weight& lambda,
                                  const SymbolPoly& f) {
    if (f.involves(Family::Xi) || f.involves(Family::Eta))
        throw std::invalid_argument("density must involve only x-variables");
    if (f.dim() != gen.sig().n())
        throw std::invalid_argument("dimension mismatch between density and generator");
    const std::vector<SymbolPoly> comp = generator_components(gen);
    SymbolPoly result = SymbolPoly::zero(f.dim());
    for (int k = 1; k <= f.dim(); ++k) result += comp[k - 1] * f.diff(var_x(k));
    result += lambda * generator_divergence(gen) * f;
    return result;
}

SymbolPoly euclidean_invariant(Contraction which, const Signature& sig) {
    const int n = sig.n();
    SymbolPoly result = SymbolPoly::zero(n);
    for (int i = 1; i <= n; ++i) {
        const Rational g = metric_entry(sig, i, i);
        const SymbolPoly x = SymbolPoly::variable(n, var_x(i));
        const SymbolPoly xi = SymbolPoly::variable(n, var_xi(i));
        const SymbolPoly eta = SymbolPoly::variable(n, var_eta(i));
        switch (which) {
            case Contraction::XX: result += g * x * x; break;
            case Contraction::XXi: result += x * xi; break;  // x^i xi_i, no metric
            case Contraction::XiXi: result += g * xi * xi; break;
            case Contraction::XiEta: result += g * xi * eta; break;
            case Contraction::EtaEta: result += g * eta * eta; break;
        }
    }
    return result;
}

SymbolPoly contraction_power_product(int r, int s, int t, const Signature& sig) {
    if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("negative exponent");
    SymbolPoly result = SymbolPoly::constant(sig.n(), 1);
    const SymbolPoly rxixi = euclidean_invariant(Contraction::XiXi, sig);
    const SymbolPoly rxieta = euclidean_invariant(Contraction::XiEta, sig);
    const SymbolPoly retaeta = euclidean_invariant(Contraction::EtaEta, sig);
    for (int a = 0; a < r; ++a) result *= rxixi;
    for (int a = 0; a < s; ++a) result *= rxieta;
    for (int a = 0; a < t; ++a) result *= retaeta;
    return result;
}

}  // namespace confop
