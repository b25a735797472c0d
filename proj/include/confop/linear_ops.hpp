#pragma once

#include <confop/symbol_action.hpp>

#include <map>
#include <utility>
#include <vector>

namespace confop {

// Weights (lambda, mu) = ((n-2k)/2n, (n+2k)/2n) at which the order-2k power
// of the metric Laplacian is conformally invariant.
std::pair<Weight, Weight> admissible_linear_weights(int k, int n);

// Residuals of the candidate symbol R_xixi^k under every generator.
ResidualReport check_linear_invariance(int k, const LinearContext& ctx);

// An invariant linear operator written on the reduced ansatz
// sum_k c_k R_xixi^k.
struct LinearOperatorSymbol {
    LinearContext ctx;
    std::map<int, Rational> coefficients;  // k -> c_k, nonzero entries only

    int order() const;  // 2 * max stored k; -1 when empty
    SymbolPoly to_poly() const;
};

// Exhaustive classification: the general polynomial ansatz in (x, xi) with
// x-degree <= x_degree_bound and xi-degree <= 2 k_max is intersected with
// the kernel of every conformal generator, constraint families ordered so
// cheap eigen-slices (dilation) and derivative peels (translations) shrink
// the problem before any dense elimination. Each surviving element is then
// decomposed over {R_xixi^k}; failure to decompose is a logic error.
std::vector<LinearOperatorSymbol> classify_linear(const LinearContext& ctx, int k_max,
                                                  int x_degree_bound = 4);

}  // namespace confop
