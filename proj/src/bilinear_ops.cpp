#include <confop/bilinear_ops.hpp>

#include <confop/linalg.hpp>

#include <utility>

namespace confop {

namespace {

// 2j + n(2w - 1), the denominator family of both recurrence equations.
Rational lattice_factor(int j, const Weight& w, int n) {
    return 2 * j + n * (2 * w - 1);
}

void check_resonance(int k, const Weight& w, int n, const char* name) {
    for (int j = 1; j <= k; ++j) {
        if (lattice_factor(j, w, n) == 0) {
            throw ResonantWeightError(std::string("resonant weight: factor 2*") +
                                      std::to_string(j) + " + n(2*" + name + " - 1) vanishes (" +
                                      name + " = " + to_string(w) + ", n = " +
                                      std::to_string(n) + ")");
        }
    }
}

void store(CoeffTable& table, int r, int s, int t, const Rational& c) {
    if (c != 0) table.entries[{r, s, t}] = c;
}

}  // namespace

Rational CoeffTable::at(int r, int s, int t) const {
    auto it = entries.find({r, s, t});
    return it == entries.end() ? Rational(0) : it->second;
}

SymbolPoly CoeffTable::to_poly(const Signature& sig) const {
    SymbolPoly p = SymbolPoly::zero(sig.n());
    for (const auto& [m, c] : entries) p += c * contraction_power_product(m.r, m.s, m.t, sig);
    return p;
}

Weight target_weight(const Weight& lambda, const Weight& mu, int k, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("order index must be >= 0");
    return lambda + mu + Rational(2 * k, n);
}

CoeffTable solve_recurrence(int k, const Weight& lambda, const Weight& mu,
                            const Signature& sig) {
    if (k < 0) throw std::invalid_argument("order index must be >= 0");
    const int n = sig.n();
    check_resonance(k, lambda, n, "lambda");
    check_resonance(k, mu, n, "mu");

    CoeffTable table{k, {}};
    table.entries[{0, k, 0}] = 1;

    // March down the r = 0 chain with the second equation: c_{0,s,t+1} from
    // c_{0,s+1,t}.
    for (int t = 0; t + 1 <= k; ++t) {
        const int s = k - 1 - t;
        const Rational numer = -2 * (s + 1) * (s + n * lambda) * table.at(0, s + 1, t);
        const Rational denom = 2 * (t + 1) * lattice_factor(t + 1, mu, n);
        store(table, 0, s, t + 1, numer / denom);
    }

    // Lift whole levels with the first equation: c_{r+1,s,t} from c_{r,*,*}.
    for (int r = 0; r + 1 <= k; ++r) {
        for (int t = 0; t <= k - r - 1; ++t) {
            const int s = k - r - 1 - t;
            const Rational numer =
                Rational((s + 2) * (s + 1)) * table.at(r, s + 2, t - 1) -
                2 * (s + 1) * (s + 2 * t + n * mu) * table.at(r, s + 1, t);
            const Rational denom = 2 * (r + 1) * lattice_factor(r + 1, lambda, n);
            store(table, r + 1, s, t, numer / denom);
        }
    }

    // The fill used one path through an overdetermined system; demand that
    // every instance of both equations holds on the result.
    for (int r = 0; r + 1 <= k; ++r) {
        for (int t = 0; t <= k - r - 1; ++t) {
            const int s = k - r - 1 - t;
            const Rational lhs =
                2 * (r + 1) * lattice_factor(r + 1, lambda, n) * table.at(r + 1, s, t) -
                Rational((s + 2) * (s + 1)) * table.at(r, s + 2, t - 1) +
                2 * (s + 1) * (s + 2 * t + n * mu) * table.at(r, s + 1, t);
            if (lhs != 0)
                throw InconsistentSystemError("first recurrence violated at (r,s,t)=(" +
                                              std::to_string(r) + "," + std::to_string(s) +
                                              "," + std::to_string(t) + ")");
        }
    }
    for (int t = 0; t + 1 <= k; ++t) {
        for (int r = 0; r <= k - t - 1; ++r) {
            const int s = k - t - 1 - r;
            const Rational lhs =
                2 * (t + 1) * lattice_factor(t + 1, mu, n) * table.at(r, s, t + 1) -
                Rational((s + 2) * (s + 1)) * table.at(r - 1, s + 2, t) +
                2 * (s + 1) * (s + 2 * r + n * lambda) * table.at(r, s + 1, t);
            if (lhs != 0)
                throw InconsistentSystemError("second recurrence violated at (r,s,t)=(" +
                                              std::to_string(r) + "," + std::to_string(s) +
                                              "," + std::to_string(t) + ")");
        }
    }
    return table;
}

BilinearOperator construct_bilinear(int k, const Weight& lambda, const Weight& mu,
                                    const Signature& sig) {
    BilinearContext ctx{sig, lambda, mu, target_weight(lambda, mu, k, sig.n())};
    return {ctx, solve_recurrence(k, lambda, mu, sig)};
}

CoeffTable closed_form(int k, const Weight& lambda, const Weight& mu, int n) {
    const Rational a1 = lattice_factor(1, lambda, n);  // 2 + n(2 lambda - 1)
    const Rational b1 = lattice_factor(1, mu, n);      // 2 + n(2 mu - 1)
    const Rational a2 = lattice_factor(2, lambda, n);  // 4 + n(2 lambda - 1)
    const Rational b2 = lattice_factor(2, mu, n);      // 4 + n(2 mu - 1)
    const Rational nl = n * lambda;
    const Rational nm = n * mu;

    CoeffTable table{k, {}};
    if (k == 1) {
        store(table, 1, 0, 0, nm * b1);
        store(table, 0, 1, 0, -b1 * a1);
        store(table, 0, 0, 1, nl * a1);
        return table;
    }
    if (k == 2) {
        store(table, 0, 2, 0, -a1 * b1 * a2 * b2);
        store(table, 1, 1, 0, 2 * (1 + nm) * b1 * a2 * b2);
        store(table, 0, 1, 1, 2 * (1 + nl) * a1 * a2 * b2);
        store(table, 1, 0, 1,
              Rational(-1, 2) *
                  (a1 + 2 * (1 + nm) * (2 + nl) + b1 + 2 * (1 + nl) * (2 + nm)) * a2 * b2);
        store(table, 2, 0, 0, -(1 + nm) * b1 * nm * b2);
        store(table, 0, 0, 2, -(1 + nl) * a1 * nl * a2);
        return table;
    }
    throw std::invalid_argument("closed form is printed only for k = 1 and k = 2");
}

Rational edge_coefficient(int k, int i, EdgeSide side, const Weight& lambda,
                          const Weight& mu, int n) {
    if (k < 0 || i < 0 || i > k) throw std::invalid_argument("need 0 <= i <= k");
    const Weight& wn = side == EdgeSide::Xi ? mu : lambda;      // numerator weight
    const Weight& wd = side == EdgeSide::Xi ? lambda : mu;      // denominator weight
    Rational num(1);
    Rational den(1);
    for (int j = 1; j <= i; ++j) {
        num *= k - j + n * wn;
        const Rational factor = lattice_factor(j, wd, n);
        if (factor == 0)
            throw ResonantWeightError("resonant weight: factor 2*" + std::to_string(j) +
                                      " + n(2w - 1) vanishes (w = " + to_string(wd) +
                                      ", n = " + std::to_string(n) + ")");
        den *= factor;
    }
    Rational result = generalized_binomial(Rational(k), i) * num / den;
    if (i % 2 == 1) result = -result;
    return result;
}

ResidualReport verify_invariance(const BilinearOperator& op) {
    const SymbolPoly symbol = op.table.to_poly(op.ctx.sig);
    ResidualReport report;
    for (const Generator& gen : conformal_basis(op.ctx.sig)) {
        report.entries.push_back({gen, act_bilinear(gen, op.ctx, symbol)});
    }
    return report;
}

std::vector<CoeffTable> classify_bilinear(const BilinearContext& ctx, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    const Signature& sig = ctx.sig;

    std::vector<InvariantMonomial> monos;
    for (int r = 0; r <= k_max; ++r)
        for (int s = 0; r + s <= k_max; ++s)
            for (int t = 0; r + s + t <= k_max; ++t) monos.push_back({r, s, t});

    std::vector<SymbolPoly> combos;
    std::vector<RatVector> coords;
    combos.reserve(monos.size());
    for (size_t j = 0; j < monos.size(); ++j) {
        combos.push_back(contraction_power_product(monos[j].r, monos[j].s, monos[j].t, sig));
        RatVector e(monos.size(), Rational(0));
        e[j] = 1;
        coords.push_back(std::move(e));
    }

    // Dilation slices by homogeneity level first; translations and rotations
    // pass the isometry-invariant ansatz through; inversions carry the real
    // constraints.
    std::vector<Generator> ordered;
    ordered.push_back(Generator::dilation(sig));
    for (int i = 1; i <= sig.n(); ++i) ordered.push_back(Generator::translation(sig, i));
    for (int i = 1; i <= sig.n(); ++i)
        for (int j = i + 1; j <= sig.n(); ++j) ordered.push_back(Generator::rotation(sig, i, j));
    for (int i = 1; i <= sig.n(); ++i) ordered.push_back(Generator::inversion(sig, i));

    for (const Generator& gen : ordered) {
        if (combos.empty()) break;
        std::vector<SymbolPoly> images;
        images.reserve(combos.size());
        for (const SymbolPoly& c : combos) images.push_back(act_bilinear(gen, ctx, c));
        const std::vector<RatVector> kernel = kernel_of_images(images);

        std::vector<SymbolPoly> next_combos;
        std::vector<RatVector> next_coords;
        for (const RatVector& v : kernel) {
            SymbolPoly combo = SymbolPoly::zero(sig.n());
            RatVector coord(monos.size(), Rational(0));
            for (size_t j = 0; j < v.size(); ++j) {
                if (v[j] == 0) continue;
                combo += v[j] * combos[j];
                for (size_t m = 0; m < monos.size(); ++m) coord[m] += v[j] * coords[j][m];
            }
            next_combos.push_back(std::move(combo));
            next_coords.push_back(std::move(coord));
        }
        combos = std::move(next_combos);
        coords = std::move(next_coords);
    }

    std::vector<CoeffTable> result;
    for (const RatVector& coord : coords) {
        CoeffTable table{0, {}};
        int level = -1;
        for (size_t m = 0; m < monos.size(); ++m) {
            if (coord[m] == 0) continue;
            if (level < 0) level = monos[m].level();
            if (monos[m].level() != level)
                throw std::logic_error("classification produced a mixed-level table");
            table.entries[monos[m]] = coord[m];
        }
        if (level < 0) continue;
        table.k = level;
        // Normalize on the recurrence's parameter entry when present.
        Rational pivot = table.at(0, table.k, 0);
        if (pivot == 0) pivot = table.entries.begin()->second;
        for (auto& [m, c] : table.entries) c /= pivot;
        result.push_back(std::move(table));
    }
    return result;
}

}  // namespace confop
