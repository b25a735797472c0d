#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace confop {

// Exact arbitrary-precision rational scalar, always in lowest terms with
// positive denominator. GMP's arithmetic preserves canonical form; the
// two-argument constructor is the one entry point that has to normalize.
class Rational : public mpq_class {
  public:
    Rational() : mpq_class(0) {}
    Rational(int n) : mpq_class(n) {}
    Rational(long n) : mpq_class(n) {}
    Rational(long num, long den) : mpq_class(num, den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        canonicalize();
    }
    Rational(const mpq_class& v) : mpq_class(v) {}
    Rational(mpq_class&& v) : mpq_class(std::move(v)) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}
};

// Density degree. Weights are exact rationals throughout.
using Weight = Rational;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q"; the result is reduced to lowest terms. Decimal
// and exponent notation are rejected so scalar input stays exact.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw std::invalid_argument("malformed rational: " + text);
    if (pos < text.size()) {
        if (text[pos] != '/') throw std::invalid_argument("malformed rational: " + text);
        ++pos;
        digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0 || pos != text.size())
            throw std::invalid_argument("malformed rational: " + text);
    }
    const std::string body = text[0] == '+' ? text.substr(1) : text;
    mpq_class q(body);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return Rational(std::move(q));
}

// Generalized binomial coefficient C(a, i) = a(a-1)...(a-i+1) / i! over exact
// rationals; a need not be an integer.
inline Rational generalized_binomial(const Rational& a, int i) {
    if (i < 0) return Rational(0);
    Rational num(1);
    Rational den(1);
    for (int j = 0; j < i; ++j) {
        num *= a - j;
        den *= j + 1;
    }
    return num / den;
}

}  // namespace confop
