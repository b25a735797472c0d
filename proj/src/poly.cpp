#include <confop/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace confop {

std::string to_string(const Variable& v) {
    static const char* names[] = {"x", "xi", "eta"};
    return std::string(names[static_cast<int>(v.family)]) + std::to_string(v.index);
}

Monomial::Monomial(Variable v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) factors_.push_back({v, exp});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

bool Monomial::involves(Family f) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [f](const auto& p) { return p.first.family == f; });
}

int Monomial::max_index() const {
    int m = 0;
    for (const auto& [v, e] : factors_) m = std::max(m, v.index);
    return m;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first < ib->first)
            out.factors_.push_back(*ia++);
        else if (ib->first < ia->first)
            out.factors_.push_back(*ib++);
        else {
            out.factors_.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
    return out;
}

Monomial Monomial::reduce(const Variable& v) const {
    Monomial out;
    bool found = false;
    for (const auto& [w, e] : factors_) {
        if (w == v) {
            found = true;
            if (e > 1) out.factors_.push_back({w, e - 1});
        } else {
            out.factors_.push_back({w, e});
        }
    }
    if (!found) throw std::invalid_argument("variable does not divide monomial");
    return out;
}

bool Monomial::operator<(const Monomial& other) const {
    int da = degree(), db = other.degree();
    if (da != db) return da < db;
    // Lexicographic on exponent vectors in variable order: the monomial with
    // the larger exponent on the earliest differing variable is the greater.
    auto ia = factors_.begin(), ib = other.factors_.begin();
    while (ia != factors_.end() && ib != other.factors_.end()) {
        if (ia->first < ib->first) return false;  // *this has positive exponent first
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == factors_.end() && ib != other.factors_.end();
}

SymbolPoly SymbolPoly::constant(int dim, const Rational& c) {
    SymbolPoly p(dim);
    p.add_term(Monomial(), c);
    return p;
}

SymbolPoly SymbolPoly::variable(int dim, const Variable& v) {
    SymbolPoly p(dim);
    if (v.index < 1 || v.index > dim) throw std::invalid_argument("variable index out of range");
    p.add_term(Monomial(v), Rational(1));
    return p;
}

SymbolPoly SymbolPoly::monomial(int dim, const Monomial& m, const Rational& c) {
    SymbolPoly p(dim);
    if (m.max_index() > dim) throw std::invalid_argument("variable index out of range");
    p.add_term(m, c);
    return p;
}

int SymbolPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational SymbolPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool SymbolPoly::involves(Family f) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [f](const auto& t) { return t.first.involves(f); });
}

void SymbolPoly::check_same_dim(const SymbolPoly& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

void SymbolPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& other) {
    check_same_dim(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& other) {
    check_same_dim(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    a.check_same_dim(b);
    SymbolPoly out(a.dim());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial::mul(ma, mb), ca * cb);
    return out;
}

SymbolPoly& SymbolPoly::operator*=(const SymbolPoly& other) {
    *this = *this * other;
    return *this;
}

SymbolPoly& SymbolPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

SymbolPoly SymbolPoly::diff(const Variable& v) const {
    if (v.index < 1 || v.index > dim_) throw std::invalid_argument("variable index out of range");
    SymbolPoly out(dim_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        out.add_term(m.reduce(v), c * e);
    }
    return out;
}

std::string SymbolPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (highest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_shown = (a != 1) || m.is_constant();
        if (coeff_shown) os << a.get_str();
        bool need_star = coeff_shown;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << "*";
            os << to_string(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymbolPoly& p) { return os << p.str(); }

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;
    int dim;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }

    Rational read_rational() {
        std::string num = read_digits();
        if (peek() == '/') {
            ++pos;
            std::string den = read_digits();
            return rational_from_string(num + "/" + den);
        }
        return rational_from_string(num);
    }

    // x{i}, xi{i} or eta{i} with optional ^e.
    std::pair<Monomial, bool> read_factor() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string name = text.substr(start, pos - start);
        Family fam;
        if (name == "x")
            fam = Family::X;
        else if (name == "xi")
            fam = Family::Xi;
        else if (name == "eta")
            fam = Family::Eta;
        else
            fail("unknown variable family '" + name + "'");
        int index = std::stoi(read_digits());
        if (index < 1 || index > dim) fail("variable index out of range 1.." + std::to_string(dim));
        int exp = 1;
        if (peek() == '^') {
            ++pos;
            exp = std::stoi(read_digits());
        }
        Monomial m;
        for (int e = 0; e < exp; ++e) m = Monomial::mul(m, Monomial(Variable{fam, index}));
        return {m, true};
    }

    void read_term(SymbolPoly& acc, bool negative) {
        Rational coeff(negative ? -1 : 1);
        Monomial mono;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= read_rational();
        } else {
            auto [m, ok] = read_factor();
            mono = m;
            have_factor = true;
        }
        while (peek() == '*') {
            ++pos;
            auto [m, ok] = read_factor();
            mono = Monomial::mul(mono, m);
            have_factor = true;
        }
        (void)have_factor;
        acc.add_term(mono, coeff);
    }

    SymbolPoly parse() {
        SymbolPoly acc(dim);
        bool negative = false;
        if (peek() == '+')
            ++pos;
        else if (peek() == '-') {
            ++pos;
            negative = true;
        }
        if (at_end()) fail("empty polynomial");
        read_term(acc, negative);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos;
            read_term(acc, op == '-');
        }
        return acc;
    }
};

}  // namespace

SymbolPoly parse_poly(const std::string& text, int dim) {
    PolyParser parser{text, 0, dim};
    return parser.parse();
}

}  // namespace confop
