#pragma once

#include <confop/symbol_action.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace confop {

// Exponent triple of R^{r,s,t} = R_xixi^r R_xieta^s R_etaeta^t.
struct InvariantMonomial {
    int r = 0;
    int s = 0;
    int t = 0;

    int level() const { return r + s + t; }
    auto operator<=>(const InvariantMonomial&) const = default;
};

// Coefficient table of one homogeneous operator: the level-k slice
// sum_{r+s+t=k} c_{rst} R^{r,s,t}.
struct CoeffTable {
    int k = 0;
    std::map<InvariantMonomial, Rational> entries;  // nonzero entries only

    Rational at(int r, int s, int t) const;  // zero when absent
    SymbolPoly to_poly(const Signature& sig) const;
    bool operator==(const CoeffTable&) const = default;
};

// A bilinear operator candidate together with its weights. Invariance
// additionally requires nu = lambda + mu + 2k/n.
struct BilinearOperator {
    BilinearContext ctx;
    CoeffTable table;
};

// The homogeneity-forced target weight nu = lambda + mu + 2k/n.
Weight target_weight(const Weight& lambda, const Weight& mu, int k, int n);

// A required division by 2j + n(2w - 1) would hit zero: the weight sits on
// the degenerate lattice {(n - 2j)/2n : j = 1..k} where the recurrences
// stall.
class ResonantWeightError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The overdetermined recurrence instances disagree after the fill; this
// indicates a transcription or implementation fault, never generic weights.
class InconsistentSystemError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Solves the two-equation recurrent system for the c_{rst} at level k with
// the normalization c_{0,k,0} = 1. Resonance is detected eagerly before any
// division; after the fill every instance of both equations is re-checked.
CoeffTable solve_recurrence(int k, const Weight& lambda, const Weight& mu,
                            const Signature& sig);

// solve_recurrence packaged with the forced target weight.
BilinearOperator construct_bilinear(int k, const Weight& lambda, const Weight& mu,
                                    const Signature& sig);

// The printed second- and fourth-order coefficient tables, evaluated exactly
// as polynomials in (n, lambda, mu). Their global scale differs from the
// recurrence normalization. Only k = 1 and k = 2 exist in closed form.
CoeffTable closed_form(int k, const Weight& lambda, const Weight& mu, int n);

// Which boundary of the coefficient triangle an edge formula walks.
enum class EdgeSide { Xi, Eta };

// Closed-form edge coefficient: c_{i,k-i,0} for the xi-edge,
//   (-1)^i C(k,i) prod_{j=1..i}(k-j+n mu) / prod_{j=1..i}(2j+n(2 lambda -1)),
// and c_{0,k-i,i} for the eta-edge with lambda and mu exchanged,
// both normalized to c_{0,k,0} = 1.
Rational edge_coefficient(int k, int i, EdgeSide side, const Weight& lambda,
                          const Weight& mu, int n);

// Applies every conformal generator to the expanded symbol and reports the
// residuals; all-zero means the operator is invariant.
ResidualReport verify_invariance(const BilinearOperator& op);

// Exhaustive classification over the ansatz of all R^{r,s,t} with
// r+s+t <= k_max: exact nullspace of the stacked generator constraints.
// No division by weight-dependent factors occurs, so resonant weights are
// legal inputs; uniqueness appears as a one-dimensional nullspace at
// nu = lambda + mu + 2k/n and generic weights.
std::vector<CoeffTable> classify_bilinear(const BilinearContext& ctx, int k_max);

}  // namespace confop
