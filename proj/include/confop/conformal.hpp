#pragma once

#include <confop/poly.hpp>
#include <confop/rational.hpp>

#include <string>
#include <vector>

namespace confop {

// Flat diagonal metric: first p entries +1, last q entries -1.
struct Signature {
    int p = 0;
    int q = 0;

    int n() const { return p + q; }
    bool operator==(const Signature&) const = default;
};

// g_{ii} (equal to g^{ii} for a diagonal +/-1 metric); zero off-diagonal.
Rational metric_entry(const Signature& sig, int i, int j);

// One basis vector field of the conformal Lie algebra o(p+1, q+1) on flat
// space: translations, rotations (i<j), the dilation, and the inversions.
// Each generator carries its signature; mixing signatures is rejected.
class Generator {
  public:
    enum class Kind { Translation, Rotation, Dilation, Inversion };

    static Generator translation(const Signature& sig, int i);
    static Generator rotation(const Signature& sig, int i, int j);
    static Generator dilation(const Signature& sig);
    static Generator inversion(const Signature& sig, int i);

    Kind kind() const { return kind_; }
    const Signature& sig() const { return sig_; }
    int i() const { return i_; }
    int j() const { return j_; }
    std::string str() const;

  private:
    Generator(Kind kind, Signature sig, int i, int j)
        : kind_(kind), sig_(sig), i_(i), j_(j) {}

    Kind kind_;
    Signature sig_;
    int i_;
    int j_;
};

// All n + n(n-1)/2 + 1 + n basis generators, in that order.
std::vector<Generator> conformal_basis(const Signature& sig);

// Component functions X^k(x), k = 1..n, of the vector field X = X^k d_k.
std::vector<SymbolPoly> generator_components(const Generator& gen);

// Divergence d_k X^k. Zero for translations and rotations, n for the
// dilation, -2n x_i for the i-th inversion.
SymbolPoly generator_divergence(const Generator& gen);

// Lie derivative of a lambda-density: X^i d_i f + lambda (div X) f.
// f must involve only x-variables.
SymbolPoly lie_derivative_density(const Generator& gen, const Weight& lambda,
                                  const SymbolPoly& f);

// The five metric contractions generating the rotation-invariant symbols.
enum class Contraction { XX, XXi, XiXi, XiEta, EtaEta };

SymbolPoly euclidean_invariant(Contraction which, const Signature& sig);

// R_xixi^r R_xieta^s R_etaeta^t.
SymbolPoly contraction_power_product(int r, int s, int t, const Signature& sig);

}  // namespace confop
