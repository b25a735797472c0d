#pragma once

#include <confop/rational.hpp>

#include <string>
#include <vector>

namespace confop {

// Dense univariate polynomial over Rational; coefficients_[i] multiplies x^i
// and the top coefficient is nonzero (canonical form).
class Poly1D {
  public:
    Poly1D() = default;
    explicit Poly1D(std::vector<Rational> coefficients);

    static Poly1D constant(const Rational& c);
    // c * x^degree
    static Poly1D monomial(int degree, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    Rational coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Poly1D derivative(int times = 1) const;

    Poly1D& operator+=(const Poly1D& other);
    Poly1D& operator-=(const Poly1D& other);
    Poly1D& operator*=(const Rational& c);
    Poly1D operator-() const;

    friend Poly1D operator+(Poly1D a, const Poly1D& b) { return a += b; }
    friend Poly1D operator-(Poly1D a, const Poly1D& b) { return a -= b; }
    friend Poly1D operator*(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator*(const Rational& c, Poly1D p) { return p *= c; }
    friend Poly1D operator*(Poly1D p, const Rational& c) { return p *= c; }

    bool operator==(const Poly1D&) const = default;

    std::string str() const;

  private:
    void trim();

    std::vector<Rational> coefficients_;
};

// Coefficient of f^(i) g^(k-i) in the order-k transvectant, indexed by i:
//   (-1)^i C(2 mu + k - 1, i) C(2 lambda + k - 1, k - i)
// with generalized binomials evaluated as falling factorials.
std::vector<Rational> transvectant_coefficients(int k, const Weight& lambda,
                                                const Weight& mu);

// sum_{i+j=k} coeff_i f^(i) g^(j); the result is a density of weight
// lambda + mu + k.
Poly1D apply_transvectant(int k, const Weight& lambda, const Weight& mu, const Poly1D& f,
                          const Poly1D& g);

// The projective vector fields a(x) d/dx with a in {1, x, x^2}.
std::vector<Poly1D> sl2_basis();
std::string sl2_name(const Poly1D& a);

// Lie derivative of a lambda-density along a(x) d/dx: a f' + lambda a' f.
Poly1D lie_derivative_1d(const Poly1D& a, const Weight& lambda, const Poly1D& f);

// Nonzero invariance defects on one-variable monomial densities.
struct Sl2Report {
    struct Entry {
        std::string generator;
        std::string check;  // "transvectant" or "derivative"
        Poly1D f;
        Poly1D g;  // zero for the derivative check
        Poly1D residual;
    };
    std::vector<Entry> entries;

    bool all_zero() const { return entries.empty(); }
    std::vector<std::string> offenders() const;
};

// Defects of the order-k transvectant at weights (lambda, mu), target
// lambda + mu + k, on monomial pairs of degree <= degree_bound.
std::vector<Sl2Report::Entry> transvectant_residual(int k, const Weight& lambda,
                                                    const Weight& mu, int degree_bound);

// Defects of f -> f^(k) as a map from weight lambda to lambda + k.
std::vector<Sl2Report::Entry> derivative_residual(int k, const Weight& lambda,
                                                  int degree_bound);

// Combined report: the transvectant at (lambda, mu) plus the k-th derivative
// at its forced weight (1 - k)/2, both on monomials of degree <= 2k + 2.
Sl2Report sl2_residual(int k, const Weight& lambda, const Weight& mu);

}  // namespace confop
