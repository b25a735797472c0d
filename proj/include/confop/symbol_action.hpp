#pragma once

#include <confop/conformal.hpp>
#include <confop/poly.hpp>
#include <confop/rational.hpp>

#include <string>
#include <vector>

namespace confop {

// Weights for a linear operator F_lambda -> F_mu acting on symbols in (x, xi).
struct LinearContext {
    Signature sig;
    Weight lambda;
    Weight mu;

    Rational delta() const { return mu - lambda; }
};

// Weights for a bilinear operator F_lambda (x) F_mu -> F_nu, symbols in
// (x, xi, eta).
struct BilinearContext {
    Signature sig;
    Weight lambda;
    Weight mu;
    Weight nu;

    Rational delta() const { return nu - mu - lambda; }
};

// Natural lift of the vector field to the (one- or two-copy) cotangent
// bundle acting on delta-weighted symbols:
//   X^i d_i P - fam_a (d_b X^a) d_{fam_b} P + delta (div X) P
// summed over the xi family, and over eta as well when with_eta is set.
SymbolPoly cotangent_lift(const Generator& gen, const Rational& delta,
                          const SymbolPoly& p, bool with_eta);

// Action of a conformal generator on a linear-operator symbol P(x, xi).
// Affine generators act by the lift alone; inversions pick up the trace and
// Euler correction terms.
SymbolPoly act_linear(const Generator& gen, const LinearContext& ctx, const SymbolPoly& p);

// Action of a conformal generator on a bilinear-operator symbol P(x, xi, eta).
SymbolPoly act_bilinear(const Generator& gen, const BilinearContext& ctx, const SymbolPoly& p);

// Closed form of the inversion action on the monomial R^{r,s,t}: seven
// coefficients on the listed neighbor monomials (k = r+s+t).
struct InversionExpansion {
    Rational on_x;        // x_i R^{r,s,t}:      2(2k - n delta)
    Rational on_xi_r;     // xi_i R^{r-1,s,t}:   2r(2r + n(2 lambda - 1))
    Rational on_xi_s2;    // xi_i R^{r,s-2,t+1}: -s(s-1)
    Rational on_xi_s;     // xi_i R^{r,s-1,t}:   2s(s + 2t + n mu - 1)
    Rational on_eta_t;    // eta_i R^{r,s,t-1}:  2t(2t + n(2 mu - 1))
    Rational on_eta_s2;   // eta_i R^{r+1,s-2,t}: -s(s-1)
    Rational on_eta_s;    // eta_i R^{r,s-1,t}:  2s(s + 2r + n lambda - 1)
};

InversionExpansion inversion_monomial_expansion(int r, int s, int t,
                                                const BilinearContext& ctx);

// The expansion assembled as a polynomial for the i-th inversion (x_i enters
// with its index lowered by the metric).
SymbolPoly inversion_expansion_poly(int r, int s, int t, int i, const BilinearContext& ctx);

// Per-generator action residuals of a candidate symbol; all-zero means the
// symbol is invariant.
struct ResidualReport {
    struct Entry {
        Generator gen;
        SymbolPoly residual;
    };
    std::vector<Entry> entries;

    bool all_zero() const;
    // Names of generators with nonzero residual.
    std::vector<std::string> offenders() const;
};

}  // namespace confop
