#include <confop/cli.hpp>

#include <confop/io.hpp>
#include <confop/linear_ops.hpp>
#include <confop/oracle.hpp>
#include <confop/transvectant.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace confop {

namespace {

// Non-parse failures carry their exit code to the top-level handler.
struct CommandFailure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
    throw CommandFailure{code, std::move(message)};
}

enum class Format { json, latex, text };

Format parse_format(const std::string& name, bool latex_supported) {
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    if (name == "latex") {
        if (latex_supported) return Format::latex;
        fail(exit_parse, "latex format is not supported by this command");
    }
    fail(exit_parse, "unsupported format: " + name + " (expected json, latex, or text)");
}

Weight parse_weight(const std::string& text, const char* flag) {
    try {
        return rational_from_string(text);
    } catch (const std::invalid_argument& e) {
        fail(exit_parse, std::string(flag) + ": " + e.what());
    }
}

Signature parse_signature(const std::string& text, int n_flag) {
    const auto comma = text.find(',');
    const auto parse_part = [&](const std::string& part) {
        if (part.empty() || part.size() > 4 ||
            part.find_first_not_of("0123456789") != std::string::npos) {
            fail(exit_parse, "--signature expects p,q with nonnegative integers");
        }
        return std::stoi(part);
    };
    if (comma == std::string::npos) {
        fail(exit_parse, "--signature expects p,q with nonnegative integers");
    }
    const Signature sig{parse_part(text.substr(0, comma)),
                        parse_part(text.substr(comma + 1))};
    if (sig.n() < 1) fail(exit_parse, "--signature needs p + q >= 1");
    if (n_flag >= 0 && n_flag != sig.n()) {
        fail(exit_parse, "--n does not match the signature");
    }
    return sig;
}

std::string read_document(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) fail(exit_io, "cannot read " + path);
    buffer << file.rdbuf();
    if (file.bad()) fail(exit_io, "cannot read " + path);
    return buffer.str();
}

void write_payload(const std::string& payload, const std::string& path,
                   std::ostream& out) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path);
    if (!file) fail(exit_io, "cannot write " + path);
    file << payload;
    file.flush();
    if (!file) fail(exit_io, "cannot write " + path);
}

BilinearOperator read_operator(const std::string& path, std::istream& in) {
    const std::string text = read_document(path, in);
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(exit_parse, std::string("invalid operator document: ") + e.what());
    }
    return operator_from_json(document);  // invalid_argument -> exit_parse
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string aligned_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [left, right] : rows) width = std::max(width, left.size());
    std::ostringstream out;
    for (const auto& [left, right] : rows) {
        out << std::string(width - left.size(), ' ') << left << "  " << right << "\n";
    }
    return out.str();
}

// --- linear-symbol rendering (sum over c_k Rxixi^k, descending k) ---------

std::string xi_power_token(int k) {
    if (k == 0) return "1";
    if (k == 1) return "Rxixi";
    return "Rxixi^" + std::to_string(k);
}

std::string linear_to_text(const std::map<int, Rational>& coefficients) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        rows.emplace_back(to_string(it->second), xi_power_token(it->first));
    }
    return aligned_rows(rows);
}

std::string linear_to_latex(const std::map<int, Rational>& coefficients) {
    if (coefficients.empty()) return "0";
    std::string out;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        const bool negative = it->second < 0;
        const Rational magnitude = negative ? Rational(-it->second) : it->second;
        std::string body;
        if (it->first == 0) {
            body = rational_to_latex(magnitude);
        } else {
            body = "R_{\\xi\\xi}";
            if (it->first > 1) body += "^{" + std::to_string(it->first) + "}";
            if (magnitude != 1) body = rational_to_latex(magnitude) + " " + body;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

nlohmann::ordered_json linear_coefficients_json(const std::map<int, Rational>& coefficients) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [k, c] : coefficients) {
        nlohmann::ordered_json entry;
        entry["k"] = k;
        entry["c"] = to_string(c);
        entries.push_back(std::move(entry));
    }
    return entries;
}

nlohmann::ordered_json table_coefficients_json(const CoeffTable& table) {
    return operator_to_json(BilinearOperator{{Signature{1, 0}, {}, {}, {}}, table})
        .at("coefficients");
}

std::string poly_str(const Monomial& m, int dim) {
    return SymbolPoly::monomial(dim, m, Rational(1)).str();
}

// Converts a one-variable coefficient polynomial (in x1) to dense form.
Poly1D to_poly1d(const SymbolPoly& p, const char* flag) {
    if (p.involves(Family::Xi) || p.involves(Family::Eta)) {
        fail(exit_parse, std::string(flag) + ": expected a polynomial in x1 only");
    }
    std::vector<Rational> coeffs;
    for (const auto& [mono, c] : p.terms()) {
        const int e = mono.exponent(var_x(1));
        if (e != mono.degree()) {
            fail(exit_parse, std::string(flag) + ": expected a polynomial in x1 only");
        }
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] = c;
    }
    return Poly1D(std::move(coeffs));
}

SymbolPoly parse_density(const std::string& text, int dim, const char* flag) {
    SymbolPoly p;
    try {
        p = parse_poly(text, dim);
    } catch (const std::invalid_argument& e) {
        fail(exit_parse, std::string(flag) + ": " + e.what());
    }
    if (p.involves(Family::Xi) || p.involves(Family::Eta)) {
        fail(exit_parse, std::string(flag) + ": densities involve only x-variables");
    }
    return p;
}

// --- option bag ------------------------------------------------------------

struct Options {
    int n = -1;
    std::string signature;
    std::string lambda;
    std::string mu;
    std::string nu;
    int k = -1;
    int k_max = -1;
    int max_order = -1;
    int x_degree = 4;
    int degree = -1;
    int linear = -1;
    bool oracle = false;
    std::string format = "text";
    std::string output;
    std::string file;
    std::string f_text;
    std::string g_text;
};

// --- subcommand runners ----------------------------------------------------

int run_construct(const Options& opt, std::ostream& out) {
    const Signature sig = parse_signature(opt.signature, opt.n);
    const Format format = parse_format(opt.format, true);
    const Weight lambda = parse_weight(opt.lambda, "--lambda");
    const Weight mu = parse_weight(opt.mu, "--mu");
    const BilinearOperator op = construct_bilinear(opt.k, lambda, mu, sig);

    std::string payload;
    switch (format) {
        case Format::json:
            payload = dump(operator_to_json(op));
            break;
        case Format::latex:
            payload = table_to_latex(op.table) + "\n";
            break;
        case Format::text: {
            std::ostringstream text;
            text << "n: " << sig.n() << "  signature: (" << sig.p << "," << sig.q << ")\n"
                 << "lambda: " << to_string(op.ctx.lambda) << "  mu: " << to_string(op.ctx.mu)
                 << "  nu: " << to_string(op.ctx.nu) << "\n"
                 << "k: " << op.table.k << "  order: " << 2 * op.table.k << "\n"
                 << table_to_text(op.table);
            payload = text.str();
            break;
        }
    }
    write_payload(payload, opt.output, out);
    return exit_ok;
}

int run_classify_linear(const Options& opt, std::ostream& out, std::ostream& err,
                        const std::string& error_tag) {
    const Signature sig = parse_signature(opt.signature, opt.n);
    const Format format = parse_format(opt.format, true);
    const LinearContext ctx{sig, parse_weight(opt.lambda, "--lambda"),
                            parse_weight(opt.mu, "--mu")};
    if (opt.max_order < 0 || opt.max_order % 2 != 0) {
        fail(exit_parse, "--max-order must be a nonnegative even integer");
    }
    const std::vector<LinearOperatorSymbol> basis =
        classify_linear(ctx, opt.max_order / 2, opt.x_degree);

    switch (format) {
        case Format::json: {
            nlohmann::ordered_json j;
            j["n"] = sig.n();
            j["signature"] = nlohmann::ordered_json::array({sig.p, sig.q});
            j["lambda"] = to_string(ctx.lambda);
            j["mu"] = to_string(ctx.mu);
            j["max_order"] = opt.max_order;
            j["dimension"] = basis.size();
            nlohmann::ordered_json elements = nlohmann::ordered_json::array();
            for (const LinearOperatorSymbol& element : basis) {
                nlohmann::ordered_json entry;
                entry["order"] = element.order();
                entry["coefficients"] = linear_coefficients_json(element.coefficients);
                elements.push_back(std::move(entry));
            }
            j["basis"] = std::move(elements);
            out << dump(j);
            break;
        }
        case Format::latex: {
            for (const LinearOperatorSymbol& element : basis) {
                out << linear_to_latex(element.coefficients) << "\n";
            }
            break;
        }
        case Format::text: {
            out << "dimension: " << basis.size() << "\n";
            for (size_t i = 0; i < basis.size(); ++i) {
                out << "element " << (i + 1) << " (order " << basis[i].order() << "):\n"
                    << linear_to_text(basis[i].coefficients);
            }
            break;
        }
    }
    if (basis.empty()) {
        err << error_tag << "empty classification\n";
        return exit_empty_classification;
    }
    return exit_ok;
}

int run_classify_bilinear(const Options& opt, std::ostream& out, std::ostream& err,
                          const std::string& error_tag) {
    const Signature sig = parse_signature(opt.signature, opt.n);
    const Format format = parse_format(opt.format, true);
    const BilinearContext ctx{sig, parse_weight(opt.lambda, "--lambda"),
                              parse_weight(opt.mu, "--mu"),
                              parse_weight(opt.nu, "--nu")};
    const std::vector<CoeffTable> basis = classify_bilinear(ctx, opt.k_max);

    switch (format) {
        case Format::json: {
            nlohmann::ordered_json j;
            j["n"] = sig.n();
            j["signature"] = nlohmann::ordered_json::array({sig.p, sig.q});
            j["lambda"] = to_string(ctx.lambda);
            j["mu"] = to_string(ctx.mu);
            j["nu"] = to_string(ctx.nu);
            j["k_max"] = opt.k_max;
            j["dimension"] = basis.size();
            nlohmann::ordered_json elements = nlohmann::ordered_json::array();
            for (const CoeffTable& table : basis) {
                nlohmann::ordered_json entry;
                entry["k"] = table.k;
                entry["coefficients"] = table_coefficients_json(table);
                elements.push_back(std::move(entry));
            }
            j["basis"] = std::move(elements);
            out << dump(j);
            break;
        }
        case Format::latex: {
            for (const CoeffTable& table : basis) out << table_to_latex(table) << "\n";
            break;
        }
        case Format::text: {
            out << "dimension: " << basis.size() << "\n";
            for (size_t i = 0; i < basis.size(); ++i) {
                out << "element " << (i + 1) << " (level " << basis[i].k << "):\n"
                    << table_to_text(basis[i]);
            }
            break;
        }
    }
    if (basis.empty()) {
        err << error_tag << "empty classification\n";
        return exit_empty_classification;
    }
    return exit_ok;
}

int run_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err,
               const std::string& error_tag) {
    const Format format = parse_format(opt.format, false);
    const BilinearOperator op = read_operator(opt.file, in);
    const int n = op.ctx.sig.n();

    const ResidualReport report = verify_invariance(op);
    std::vector<OracleResidual> pair_defects;
    std::vector<std::string> pair_defect_generators;
    const int degree = opt.degree >= 0 ? opt.degree : 2 * op.table.k + 2;
    if (opt.oracle) {
        BilinearApplier applier(op);
        for (const Generator& gen : conformal_basis(op.ctx.sig)) {
            for (OracleResidual& defect : oracle_residual(applier, gen, degree)) {
                pair_defect_generators.push_back(gen.str());
                pair_defects.push_back(std::move(defect));
            }
        }
    }
    const bool ok = report.all_zero() && pair_defects.empty();

    switch (format) {
        case Format::json: {
            nlohmann::ordered_json j;
            j["status"] = ok ? "ok" : "not-invariant";
            nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
            for (const ResidualReport::Entry& entry : report.entries) {
                if (entry.residual.is_zero()) continue;
                nlohmann::ordered_json record;
                record["generator"] = entry.gen.str();
                record["residual"] = entry.residual.str();
                residuals.push_back(std::move(record));
            }
            j["residuals"] = std::move(residuals);
            if (opt.oracle) {
                nlohmann::ordered_json oracle;
                oracle["degree"] = degree;
                nlohmann::ordered_json defects = nlohmann::ordered_json::array();
                for (size_t i = 0; i < pair_defects.size(); ++i) {
                    nlohmann::ordered_json record;
                    record["f"] = poly_str(pair_defects[i].f, n);
                    record["g"] = poly_str(pair_defects[i].g, n);
                    record["generator"] = pair_defect_generators[i];
                    record["residual"] = pair_defects[i].residual.str();
                    defects.push_back(std::move(record));
                }
                oracle["defects"] = std::move(defects);
                j["oracle"] = std::move(oracle);
            }
            out << dump(j);
            break;
        }
        case Format::text: {
            out << "status: " << (ok ? "ok" : "not-invariant") << "\n";
            for (const ResidualReport::Entry& entry : report.entries) {
                if (entry.residual.is_zero()) continue;
                out << "residual under " << entry.gen.str() << ": " << entry.residual.str()
                    << "\n";
            }
            if (opt.oracle) {
                out << "oracle degree: " << degree << "\n";
                for (size_t i = 0; i < pair_defects.size(); ++i) {
                    out << "oracle defect under " << pair_defect_generators[i]
                        << " at f=" << poly_str(pair_defects[i].f, n)
                        << ", g=" << poly_str(pair_defects[i].g, n) << ": "
                        << pair_defects[i].residual.str() << "\n";
                }
            }
            break;
        }
        case Format::latex:
            break;  // unreachable: rejected by parse_format
    }
    if (!ok) {
        err << error_tag << "operator is not invariant\n";
        return exit_not_invariant;
    }
    return exit_ok;
}

int run_apply(const Options& opt, std::istream& in, std::ostream& out) {
    const Format format = parse_format(opt.format, false);
    SymbolPoly coefficient;
    Weight weight;

    if (opt.linear >= 0) {
        if (!opt.file.empty()) {
            fail(exit_parse, "--linear does not read an operator document");
        }
        if (!opt.g_text.empty()) fail(exit_parse, "--linear takes a single density --f");
        if (opt.signature.empty()) fail(exit_parse, "--linear requires --signature");
        const Signature sig = parse_signature(opt.signature, opt.n);
        const Weight lambda =
            opt.lambda.empty() ? Weight(0) : parse_weight(opt.lambda, "--lambda");
        const SymbolPoly f = parse_density(opt.f_text, sig.n(), "--f");
        const DensityPoly image = apply_linear(opt.linear, sig, DensityPoly{f, lambda});
        coefficient = image.coeff;
        weight = image.weight;
    } else {
        if (!opt.signature.empty() || !opt.lambda.empty()) {
            fail(exit_parse, "--signature/--lambda are only valid with --linear "
                             "(operator documents are self-describing)");
        }
        if (opt.g_text.empty()) fail(exit_parse, "--g is required when applying a table");
        const BilinearOperator op = read_operator(opt.file, in);
        const int n = op.ctx.sig.n();
        const DensityPoly f{parse_density(opt.f_text, n, "--f"), op.ctx.lambda};
        const DensityPoly g{parse_density(opt.g_text, n, "--g"), op.ctx.mu};
        const DensityPoly image = apply_bilinear(op, f, g);
        coefficient = image.coeff;
        weight = image.weight;
    }

    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["coefficient"] = coefficient.str();
        j["weight"] = to_string(weight);
        out << dump(j);
    } else {
        out << "coefficient: " << coefficient.str() << "\n"
            << "weight: " << to_string(weight) << "\n";
    }
    return exit_ok;
}

int run_transvectant(const Options& opt, std::ostream& out) {
    const Format format = parse_format(opt.format, true);
    const Weight lambda = parse_weight(opt.lambda, "--lambda");
    const Weight mu = parse_weight(opt.mu, "--mu");
    const std::vector<Rational> coefficients =
        transvectant_coefficients(opt.k, lambda, mu);

    const bool applied = !opt.f_text.empty();
    Poly1D result;
    if (applied) {
        if (format == Format::latex) {
            fail(exit_parse, "applied results are available in json and text formats");
        }
        const Poly1D f = to_poly1d(parse_density(opt.f_text, 1, "--f"), "--f");
        const Poly1D g = to_poly1d(parse_density(opt.g_text, 1, "--g"), "--g");
        result = apply_transvectant(opt.k, lambda, mu, f, g);
    }

    switch (format) {
        case Format::json: {
            nlohmann::ordered_json j;
            j["k"] = opt.k;
            j["lambda"] = to_string(lambda);
            j["mu"] = to_string(mu);
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const Rational& c : coefficients) list.push_back(to_string(c));
            j["coefficients"] = std::move(list);
            if (applied) {
                j["result"] = result.str();
                j["result_weight"] = to_string(Rational(lambda + mu + Rational(opt.k)));
            }
            out << dump(j);
            break;
        }
        case Format::latex: {
            std::string line;
            for (int i = 0; i <= opt.k; ++i) {
                const Rational& c = coefficients[i];
                if (c == 0) continue;
                const bool negative = c < 0;
                const Rational magnitude = negative ? Rational(-c) : c;
                std::string body;
                if (magnitude != 1) body = rational_to_latex(magnitude) + " ";
                body += "f^{(" + std::to_string(i) + ")} g^{(" +
                        std::to_string(opt.k - i) + ")}";
                if (line.empty()) {
                    line = (negative ? "-" : "") + body;
                } else {
                    line += (negative ? " - " : " + ") + body;
                }
            }
            if (line.empty()) line = "0";
            out << line << "\n";
            break;
        }
        case Format::text: {
            for (int i = 0; i <= opt.k; ++i) {
                out << i << ": " << to_string(coefficients[i]) << "\n";
            }
            if (applied) {
                out << "result: " << result.str() << "\n"
                    << "result weight: " << to_string(Rational(lambda + mu + Rational(opt.k)))
                    << "\n";
            }
            break;
        }
    }
    return exit_ok;
}

int run_scan(const Options& opt, std::ostream& out) {
    const Signature sig = parse_signature(opt.signature, opt.n);
    const Format format = parse_format(opt.format, false);
    const Weight lambda = parse_weight(opt.lambda, "--lambda");
    const Weight mu = parse_weight(opt.mu, "--mu");

    struct Row {
        int j;
        Weight nu;
        size_t dimension;
    };
    std::vector<Row> rows;
    for (int j = 0; j <= 2 * opt.k_max; ++j) {
        const Weight nu = Weight(lambda + mu + Rational(j, sig.n()));
        const BilinearContext ctx{sig, lambda, mu, nu};
        rows.push_back({j, nu, classify_bilinear(ctx, opt.k_max).size()});
    }

    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["n"] = sig.n();
        j["signature"] = nlohmann::ordered_json::array({sig.p, sig.q});
        j["lambda"] = to_string(lambda);
        j["mu"] = to_string(mu);
        j["k_max"] = opt.k_max;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            nlohmann::ordered_json record;
            record["j"] = row.j;
            record["nu"] = to_string(row.nu);
            record["dimension"] = row.dimension;
            list.push_back(std::move(record));
        }
        j["rows"] = std::move(list);
        out << dump(j);
    } else {
        size_t j_width = 1;
        size_t nu_width = 2;
        for (const Row& row : rows) {
            j_width = std::max(j_width, std::to_string(row.j).size());
            nu_width = std::max(nu_width, to_string(row.nu).size());
        }
        const auto pad = [](const std::string& text, size_t width) {
            return text + std::string(width - text.size(), ' ');
        };
        out << pad("j", j_width) << "  " << pad("nu", nu_width) << "  dimension\n";
        for (const Row& row : rows) {
            out << pad(std::to_string(row.j), j_width) << "  "
                << pad(to_string(row.nu), nu_width) << "  " << row.dimension << "\n";
        }
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, bool color) {
    const std::string error_tag = color ? "\033[31merror:\033[0m " : "error: ";

    Options opt;
    CLI::App app{"Exact construction, classification, and verification of conformally "
                 "invariant differential operators on densities"};
    app.name("confop");
    app.require_subcommand(1);

    const auto add_signature = [&](CLI::App* cmd, bool required) {
        CLI::Option* option =
            cmd->add_option("--signature", opt.signature, "Metric signature as p,q");
        if (required) option->required();
        cmd->add_option("--n", opt.n, "Ambient dimension (checked against --signature)");
    };
    const auto add_weights = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", opt.lambda, "First argument weight, exact rational p/q")
            ->required();
        cmd->add_option("--mu", opt.mu, "Second argument weight, exact rational p/q")
            ->required();
    };
    const auto add_format = [&](CLI::App* cmd, const char* values) {
        cmd->add_option("--format", opt.format, values)->capture_default_str();
    };

    CLI::App* construct = app.add_subcommand(
        "construct-bilinear", "Build the order-2k invariant bilinear operator table");
    add_signature(construct, true);
    add_weights(construct);
    construct->add_option("--k", opt.k, "Table level (half the operator order)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(construct, "json|latex|text");
    construct->add_option("--output", opt.output, "Write the payload to a file");

    CLI::App* classify_lin = app.add_subcommand(
        "classify-linear", "Exact nullspace of the invariance constraints for linear symbols");
    add_signature(classify_lin, true);
    add_weights(classify_lin);
    classify_lin->add_option("--max-order", opt.max_order, "Largest operator order (even)")
        ->required();
    classify_lin
        ->add_option("--x-degree", opt.x_degree, "Base-coordinate degree bound of the ansatz")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    add_format(classify_lin, "json|latex|text");

    CLI::App* classify_bil = app.add_subcommand(
        "classify-bilinear", "Exact nullspace of the invariance constraints for bilinear symbols");
    add_signature(classify_bil, true);
    add_weights(classify_bil);
    classify_bil->add_option("--nu", opt.nu, "Target weight, exact rational p/q")->required();
    classify_bil->add_option("--k-max", opt.k_max, "Largest table level in the ansatz")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(classify_bil, "json|latex|text");

    CLI::App* verify = app.add_subcommand(
        "verify", "Check invariance of an operator document (symbolic residuals)");
    verify->add_option("file", opt.file, "Operator document ('-' or omitted: stdin)");
    verify->add_flag("--oracle", opt.oracle,
                     "Also check the defining identity pairwise on monomial densities");
    verify->add_option("--degree", opt.degree, "Monomial degree bound (default 2k+2)")
        ->check(CLI::NonNegativeNumber);
    add_format(verify, "json|text");

    CLI::App* apply = app.add_subcommand(
        "apply", "Apply an operator document (or --linear k) to polynomial densities");
    apply->add_option("file", opt.file, "Operator document ('-' or omitted: stdin)");
    apply->add_option("--f", opt.f_text, "First density, e.g. \"3/2*x1^2 - x2\"")->required();
    apply->add_option("--g", opt.g_text, "Second density (bilinear mode)");
    apply->add_option("--linear", opt.linear,
                      "Apply the order-2k linear operator for this k instead")
        ->check(CLI::NonNegativeNumber);
    add_signature(apply, false);
    apply->add_option("--lambda", opt.lambda, "Density weight for --linear (default 0)");
    add_format(apply, "json|text");

    CLI::App* transvectant = app.add_subcommand(
        "transvectant", "One-dimensional bracket coefficients (and optional application)");
    transvectant->add_option("--k", opt.k, "Bracket order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_weights(transvectant);
    CLI::Option* f_opt = transvectant->add_option(
        "--f", opt.f_text, "First density as a polynomial in x1 (json/text formats)");
    CLI::Option* g_opt =
        transvectant->add_option("--g", opt.g_text, "Second density as a polynomial in x1");
    f_opt->needs(g_opt);
    g_opt->needs(f_opt);
    add_format(transvectant, "json|latex|text");

    CLI::App* scan = app.add_subcommand(
        "scan", "Sweep the target weight over lambda+mu+j/n and tabulate dimensions");
    add_signature(scan, true);
    add_weights(scan);
    scan->add_option("--k-max", opt.k_max, "Largest table level in the ansatz")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(scan, "json|text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << error_tag << e.what() << "\n";
        return exit_parse;
    }

    try {
        if (construct->parsed()) return run_construct(opt, out);
        if (classify_lin->parsed()) return run_classify_linear(opt, out, err, error_tag);
        if (classify_bil->parsed()) return run_classify_bilinear(opt, out, err, error_tag);
        if (verify->parsed()) return run_verify(opt, in, out, err, error_tag);
        if (apply->parsed()) return run_apply(opt, in, out);
        if (transvectant->parsed()) return run_transvectant(opt, out);
        if (scan->parsed()) return run_scan(opt, out);
    } catch (const CommandFailure& failure) {
        err << error_tag << failure.message << "\n";
        return failure.code;
    } catch (const ResonantWeightError& e) {
        err << error_tag << e.what() << "\n";
        return exit_resonant;
    } catch (const std::invalid_argument& e) {
        err << error_tag << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        err << error_tag << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << error_tag << "no subcommand selected\n";
    return exit_parse;
}

}  // namespace confop
