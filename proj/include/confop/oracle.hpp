#pragma once

#include <confop/bilinear_ops.hpp>
#include <confop/conformal.hpp>

#include <map>
#include <utility>
#include <vector>

namespace confop {

// A polynomial density: coefficient function (x-variables only) of weight w.
struct DensityPoly {
    SymbolPoly coeff;
    Weight weight;
};

// Realizes the coefficient table as an actual bidifferential operator:
// every R_xixi contraction becomes a metric-traced second derivative of the
// first argument, R_etaeta of the second, and R_xieta one derivative of
// each, paired through the metric. Evaluation is iterated
// differentiate-then-contract; results for monomial argument pairs are
// cached. Independent of the symbol-action module by design: this is the
// adjudicating implementation of the defining invariance identity.
class BilinearApplier {
  public:
    explicit BilinearApplier(BilinearOperator op) : op_(std::move(op)) {}

    const BilinearOperator& op() const { return op_; }

    // Applies the operator to coefficient polynomials (x-variables only).
    SymbolPoly apply(const SymbolPoly& f, const SymbolPoly& g);

  private:
    SymbolPoly apply_monomials(const Monomial& f, const Monomial& g);

    BilinearOperator op_;
    std::map<std::pair<Monomial, Monomial>, SymbolPoly> cache_;
};

// Table application with density bookkeeping; rejects weight mismatches.
DensityPoly apply_bilinear(const BilinearOperator& b, const DensityPoly& f,
                           const DensityPoly& g);

// k-fold metric Laplacian; the weight moves up by the forced shift 2k/n.
DensityPoly apply_linear(int k, const Signature& sig, const DensityPoly& f);

// One nonzero defect of the defining invariance identity on a monomial pair.
struct OracleResidual {
    Monomial f;
    Monomial g;
    SymbolPoly residual;
};

// Checks L^nu(B(f,g)) - B(L^lambda f, g) - B(f, L^mu g) on every pair of
// x-monomials of degree <= degree_bound and returns the nonzero defects.
std::vector<OracleResidual> oracle_residual(BilinearApplier& applier, const Generator& gen,
                                            int degree_bound);
std::vector<OracleResidual> oracle_residual(const BilinearOperator& b, const Generator& gen,
                                            int degree_bound);

// Same check for the linear candidate: L^mu(Lap^k f) - Lap^k(L^lambda f) on
// every x-monomial of degree <= degree_bound.
struct LinearOracleResidual {
    Monomial f;
    SymbolPoly residual;
};

std::vector<LinearOracleResidual> linear_oracle_residual(int k, const LinearContext& ctx,
                                                         const Generator& gen,
                                                         int degree_bound);

}  // namespace confop
