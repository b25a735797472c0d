#include <confop/transvectant.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace confop {

Poly1D::Poly1D(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

Poly1D Poly1D::constant(const Rational& c) { return Poly1D({c}); }

Poly1D Poly1D::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs.back() = c;
    return Poly1D(std::move(coeffs));
}

Rational Poly1D::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coefficients_.size())) return Rational(0);
    return coefficients_[i];
}

Poly1D Poly1D::derivative(int times) const {
    if (times < 0) throw std::invalid_argument("negative derivative order");
    Poly1D result = *this;
    for (int step = 0; step < times; ++step) {
        if (result.coefficients_.empty()) break;
        std::vector<Rational> next;
        next.reserve(result.coefficients_.size() - 1);
        for (size_t i = 1; i < result.coefficients_.size(); ++i) {
            next.push_back(Rational(static_cast<long>(i)) * result.coefficients_[i]);
        }
        result = Poly1D(std::move(next));
    }
    return result;
}

Poly1D& Poly1D::operator+=(const Poly1D& other) {
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    }
    for (size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] += other.coefficients_[i];
    }
    trim();
    return *this;
}

Poly1D& Poly1D::operator-=(const Poly1D& other) {
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    }
    for (size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] -= other.coefficients_[i];
    }
    trim();
    return *this;
}

Poly1D& Poly1D::operator*=(const Rational& c) {
    if (c == 0) {
        coefficients_.clear();
        return *this;
    }
    for (Rational& coeff : coefficients_) coeff *= c;
    return *this;
}

Poly1D Poly1D::operator-() const {
    Poly1D result = *this;
    for (Rational& coeff : result.coefficients_) coeff = -coeff;
    return result;
}

Poly1D operator*(const Poly1D& a, const Poly1D& b) {
    if (a.is_zero() || b.is_zero()) return Poly1D();
    std::vector<Rational> coeffs(a.coefficients_.size() + b.coefficients_.size() - 1,
                                 Rational(0));
    for (size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (size_t j = 0; j < b.coefficients_.size(); ++j) {
            coeffs[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Poly1D(std::move(coeffs));
}

std::string Poly1D::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coefficients_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit = (c == 1);
        if (i == 0) {
            out << to_string(c);
        } else {
            if (!unit) out << to_string(c) << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

void Poly1D::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::vector<Rational> transvectant_coefficients(int k, const Weight& lambda,
                                                const Weight& mu) {
    if (k < 0) throw std::invalid_argument("negative transvectant order");
    const Rational a = 2 * mu + Rational(k - 1);
    const Rational b = 2 * lambda + Rational(k - 1);
    std::vector<Rational> coeffs;
    coeffs.reserve(k + 1);
    for (int i = 0; i <= k; ++i) {
        Rational c = generalized_binomial(a, i) * generalized_binomial(b, k - i);
        if (i % 2 == 1) c = -c;
        coeffs.push_back(c);
    }
    return coeffs;
}

Poly1D apply_transvectant(int k, const Weight& lambda, const Weight& mu, const Poly1D& f,
                          const Poly1D& g) {
    const std::vector<Rational> coeffs = transvectant_coefficients(k, lambda, mu);
    Poly1D result;
    for (int i = 0; i <= k; ++i) {
        if (coeffs[i] == 0) continue;
        result += coeffs[i] * (f.derivative(i) * g.derivative(k - i));
    }
    return result;
}

std::vector<Poly1D> sl2_basis() {
    return {Poly1D::constant(Rational(1)), Poly1D::monomial(1), Poly1D::monomial(2)};
}

std::string sl2_name(const Poly1D& a) {
    if (a == Poly1D::constant(Rational(1))) return "d/dx";
    if (a == Poly1D::monomial(1)) return "x d/dx";
    if (a == Poly1D::monomial(2)) return "x^2 d/dx";
    return a.str() + " d/dx";
}

Poly1D lie_derivative_1d(const Poly1D& a, const Weight& lambda, const Poly1D& f) {
    return a * f.derivative() + lambda * (a.derivative() * f);
}

std::vector<std::string> Sl2Report::offenders() const {
    std::vector<std::string> names;
    for (const Entry& entry : entries) {
        names.push_back(entry.check + " under " + entry.generator);
    }
    return names;
}

std::vector<Sl2Report::Entry> transvectant_residual(int k, const Weight& lambda,
                                                    const Weight& mu, int degree_bound) {
    const Weight nu = lambda + mu + Rational(k);
    std::vector<Sl2Report::Entry> defects;
    for (const Poly1D& a : sl2_basis()) {
        for (int p = 0; p <= degree_bound; ++p) {
            const Poly1D f = Poly1D::monomial(p);
            const Poly1D lf = lie_derivative_1d(a, lambda, f);
            for (int q = 0; q <= degree_bound; ++q) {
                const Poly1D g = Poly1D::monomial(q);
                Poly1D residual =
                    lie_derivative_1d(a, nu, apply_transvectant(k, lambda, mu, f, g));
                residual -= apply_transvectant(k, lambda, mu, lf, g);
                residual -= apply_transvectant(k, lambda, mu, f,
                                               lie_derivative_1d(a, mu, g));
                if (!residual.is_zero()) {
                    defects.push_back({sl2_name(a), "transvectant", f, g, residual});
                }
            }
        }
    }
    return defects;
}

std::vector<Sl2Report::Entry> derivative_residual(int k, const Weight& lambda,
                                                  int degree_bound) {
    const Weight mu = lambda + Rational(k);
    std::vector<Sl2Report::Entry> defects;
    for (const Poly1D& a : sl2_basis()) {
        for (int p = 0; p <= degree_bound; ++p) {
            const Poly1D f = Poly1D::monomial(p);
            Poly1D residual = lie_derivative_1d(a, mu, f.derivative(k));
            residual -= lie_derivative_1d(a, lambda, f).derivative(k);
            if (!residual.is_zero()) {
                defects.push_back({sl2_name(a), "derivative", f, Poly1D(), residual});
            }
        }
    }
    return defects;
}

Sl2Report sl2_residual(int k, const Weight& lambda, const Weight& mu) {
    Sl2Report report;
    report.entries = transvectant_residual(k, lambda, mu, 2 * k + 2);
    const std::vector<Sl2Report::Entry> linear =
        derivative_residual(k, Rational(1 - k, 2), 2 * k + 2);
    report.entries.insert(report.entries.end(), linear.begin(), linear.end());
    return report;
}

}  // namespace confop
