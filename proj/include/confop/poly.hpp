#pragma once

#include <confop/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace confop {

// The three variable families of an operator symbol: base coordinates x^i,
// momenta xi_i for the (first) argument, momenta eta_i for the second.
enum class Family : std::uint8_t { X = 0, Xi = 1, Eta = 2 };

struct Variable {
    Family family;
    int index;  // 1-based, <= ambient dimension

    auto operator<=>(const Variable&) const = default;
};

inline Variable var_x(int i) { return {Family::X, i}; }
inline Variable var_xi(int i) { return {Family::Xi, i}; }
inline Variable var_eta(int i) { return {Family::Eta, i}; }

std::string to_string(const Variable& v);

// Sparse exponent vector: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(Variable v, int exp = 1);

    int degree() const;
    int exponent(const Variable& v) const;
    bool is_constant() const { return factors_.empty(); }
    const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

    bool involves(Family f) const;
    int max_index() const;

    static Monomial mul(const Monomial& a, const Monomial& b);
    // Monomial with the exponent of v decreased by one (v must divide *this).
    Monomial reduce(const Variable& v) const;

    bool operator==(const Monomial&) const = default;
    // Graded lexicographic: total degree first, then family order X < Xi < Eta
    // with ascending index.
    bool operator<(const Monomial& other) const;

  private:
    std::vector<std::pair<Variable, int>> factors_;
};

// Sparse polynomial over Rational in the variables x^1..x^n, xi_1..xi_n,
// eta_1..eta_n. Canonical form: no zero coefficients stored; equality is
// equality of the term maps.
class SymbolPoly {
  public:
    SymbolPoly() = default;
    explicit SymbolPoly(int dim) : dim_(dim) {}

    static SymbolPoly zero(int dim) { return SymbolPoly(dim); }
    static SymbolPoly constant(int dim, const Rational& c);
    static SymbolPoly variable(int dim, const Variable& v);
    static SymbolPoly monomial(int dim, const Monomial& m, const Rational& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    bool involves(Family f) const;

    SymbolPoly& operator+=(const SymbolPoly& other);
    SymbolPoly& operator-=(const SymbolPoly& other);
    SymbolPoly& operator*=(const SymbolPoly& other);
    SymbolPoly& operator*=(const Rational& c);
    SymbolPoly operator-() const;

    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const Rational& c, SymbolPoly p) { return p *= c; }
    friend SymbolPoly operator*(SymbolPoly p, const Rational& c) { return p *= c; }

    bool operator==(const SymbolPoly&) const = default;

    // Formal partial derivative with respect to v.
    SymbolPoly diff(const Variable& v) const;

    void add_term(const Monomial& m, const Rational& c);

    std::string str() const;

  private:
    void check_same_dim(const SymbolPoly& other) const;

    int dim_ = 0;
    std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const SymbolPoly& p);

// Parses the polynomial grammar used on the CLI and in JSON payloads:
// terms joined by +/-, each an optional rational coefficient followed by
// '*'-separated factors x{i}, xi{i}, eta{i} with optional ^e.
// Example: "3/2*x1^2*xi2 - eta1".
SymbolPoly parse_poly(const std::string& text, int dim);

}  // namespace confop
