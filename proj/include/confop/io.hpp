#pragma once

#include <confop/bilinear_ops.hpp>

#include <json.hpp>

#include <string>

namespace confop {

// Self-describing serialization of a bilinear operator:
//   {"n":…, "signature":[p,q], "lambda":"p/q", "mu":"p/q", "nu":"p/q",
//    "k":…, "coefficients":[{"r":…,"s":…,"t":…,"c":"p/q"}, …]}
// Coefficient records are emitted in descending (r,s,t) order so identical
// operators always serialize to identical bytes.
nlohmann::ordered_json operator_to_json(const BilinearOperator& op);

// Inverse of operator_to_json; rejects malformed documents (missing keys,
// wrong types, signature/dimension mismatch, entries off level k).
BilinearOperator operator_from_json(const nlohmann::json& j);

// "p/q" as \frac{p}{q}; integers stay plain. Negative values carry a
// leading minus outside the fraction.
std::string rational_to_latex(const Rational& c);

// sum c_{rst} R_{\xi\xi}^{r} R_{\xi\eta}^{s} R_{\eta\eta}^{t}, descending.
std::string table_to_latex(const CoeffTable& table);

// One aligned row per monomial: right-justified coefficient, then the
// contraction product (Rxixi^r Rxieta^s Retaeta^t), descending.
std::string table_to_text(const CoeffTable& table);

}  // namespace confop
