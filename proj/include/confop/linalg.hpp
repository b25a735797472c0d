#pragma once

#include <confop/poly.hpp>
#include <confop/rational.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace confop {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMatrix& m);

// Basis of { x : A x = 0 }.
std::vector<RatVector> nullspace(RatMatrix a);

// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Coordinates (over the input indices) of the kernel of the linear map
// e_j -> images[j]. Columns whose images land on rows no other column
// touches are peeled off before dense elimination, so large bases whose
// images barely overlap (single-monomial derivative images in particular)
// cost almost nothing.
std::vector<RatVector> kernel_of_images(const std::vector<SymbolPoly>& images);

// Kernel of `op` restricted to span(basis), returned as polynomials.
std::vector<SymbolPoly> restrict_kernel(const std::vector<SymbolPoly>& basis,
                                        const std::function<SymbolPoly(const SymbolPoly&)>& op);

}  // namespace confop
