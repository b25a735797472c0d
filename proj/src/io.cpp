#include <confop/io.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace confop {

namespace {

const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing key: ") + key);
    }
    return *it;
}

int require_int(const nlohmann::json& j, const char* key) {
    const nlohmann::json& value = require_key(j, key);
    if (!value.is_number_integer()) {
        throw std::invalid_argument(std::string(key) + " must be an integer");
    }
    return value.get<int>();
}

Rational require_rational(const nlohmann::json& j, const char* key) {
    const nlohmann::json& value = require_key(j, key);
    if (!value.is_string()) {
        throw std::invalid_argument(std::string(key) +
                                    " must be a rational string \"p/q\"");
    }
    return rational_from_string(value.get<std::string>());
}

// "Rxixi^r Rxieta^s Retaeta^t" with unit powers bare and zero powers gone.
std::string monomial_token(const InvariantMonomial& m) {
    std::string out;
    const std::pair<const char*, int> factors[] = {
        {"Rxixi", m.r}, {"Rxieta", m.s}, {"Retaeta", m.t}};
    for (const auto& [base, power] : factors) {
        if (power == 0) continue;
        if (!out.empty()) out += " ";
        out += base;
        if (power > 1) out += "^" + std::to_string(power);
    }
    if (out.empty()) out = "1";
    return out;
}

std::string monomial_latex(const InvariantMonomial& m) {
    std::string out;
    const std::pair<const char*, int> factors[] = {
        {"R_{\\xi\\xi}", m.r}, {"R_{\\xi\\eta}", m.s}, {"R_{\\eta\\eta}", m.t}};
    for (const auto& [base, power] : factors) {
        if (power == 0) continue;
        if (!out.empty()) out += " ";
        out += base;
        if (power > 1) out += "^{" + std::to_string(power) + "}";
    }
    return out;  // empty for the constant monomial
}

}  // namespace

nlohmann::ordered_json operator_to_json(const BilinearOperator& op) {
    nlohmann::ordered_json j;
    j["n"] = op.ctx.sig.n();
    j["signature"] = nlohmann::ordered_json::array({op.ctx.sig.p, op.ctx.sig.q});
    j["lambda"] = to_string(op.ctx.lambda);
    j["mu"] = to_string(op.ctx.mu);
    j["nu"] = to_string(op.ctx.nu);
    j["k"] = op.table.k;
    nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
    for (auto it = op.table.entries.rbegin(); it != op.table.entries.rend(); ++it) {
        nlohmann::ordered_json entry;
        entry["r"] = it->first.r;
        entry["s"] = it->first.s;
        entry["t"] = it->first.t;
        entry["c"] = to_string(it->second);
        coefficients.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coefficients);
    return j;
}

BilinearOperator operator_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("operator document must be an object");
    const int n = require_int(j, "n");
    if (n < 1) throw std::invalid_argument("n must be positive");

    const nlohmann::json& sig_json = require_key(j, "signature");
    if (!sig_json.is_array() || sig_json.size() != 2 ||
        !sig_json[0].is_number_integer() || !sig_json[1].is_number_integer()) {
        throw std::invalid_argument("signature must be a two-element integer array");
    }
    const Signature sig{sig_json[0].get<int>(), sig_json[1].get<int>()};
    if (sig.p < 0 || sig.q < 0 || sig.n() != n) {
        throw std::invalid_argument("signature does not match n");
    }

    BilinearOperator op;
    op.ctx.sig = sig;
    op.ctx.lambda = require_rational(j, "lambda");
    op.ctx.mu = require_rational(j, "mu");
    op.ctx.nu = require_rational(j, "nu");
    op.table.k = require_int(j, "k");
    if (op.table.k < 0) throw std::invalid_argument("k must be nonnegative");

    const nlohmann::json& coefficients = require_key(j, "coefficients");
    if (!coefficients.is_array()) {
        throw std::invalid_argument("coefficients must be an array");
    }
    for (const nlohmann::json& entry : coefficients) {
        if (!entry.is_object()) {
            throw std::invalid_argument("coefficient entries must be objects");
        }
        const InvariantMonomial mono{require_int(entry, "r"), require_int(entry, "s"),
                                     require_int(entry, "t")};
        if (mono.r < 0 || mono.s < 0 || mono.t < 0) {
            throw std::invalid_argument("coefficient exponents must be nonnegative");
        }
        if (mono.level() != op.table.k) {
            throw std::invalid_argument("coefficient entry off level k");
        }
        if (op.table.entries.count(mono) != 0) {
            throw std::invalid_argument("duplicate coefficient entry");
        }
        const Rational c = require_rational(entry, "c");
        if (c != 0) op.table.entries.emplace(mono, c);
    }
    return op;
}

std::string rational_to_latex(const Rational& c) {
    const mpz_class num = c.get_num();
    const mpz_class den = c.get_den();
    if (den == 1) return num.get_str();
    const std::string sign = num < 0 ? "-" : "";
    const mpz_class magnitude = abs(num);
    return sign + "\\frac{" + magnitude.get_str() + "}{" + den.get_str() + "}";
}

std::string table_to_latex(const CoeffTable& table) {
    if (table.entries.empty()) return "0";
    std::string out;
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
        const Rational& c = it->second;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        const std::string mono = monomial_latex(it->first);
        std::string body;
        if (mono.empty()) {
            body = rational_to_latex(magnitude);
        } else if (magnitude == 1) {
            body = mono;
        } else {
            body = rational_to_latex(magnitude) + " " + mono;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string table_to_text(const CoeffTable& table) {
    if (table.entries.empty()) return "0\n";
    std::vector<std::pair<std::string, std::string>> rows;
    size_t width = 0;
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
        rows.emplace_back(to_string(it->second), monomial_token(it->first));
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream out;
    for (const auto& [coeff, mono] : rows) {
        out << std::string(width - coeff.size(), ' ') << coeff << "  " << mono << "\n";
    }
    return out.str();
}

}  // namespace confop
