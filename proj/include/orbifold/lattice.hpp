#pragma once

#include <utility>
#include <vector>

#include "orbifold/numeric.hpp"
#include "orbifold/perm_group.hpp"

namespace orbifold {

using LatticeVector = std::pair<BigInt, BigInt>;  // (a-exponent, b-exponent)

/// Finite-index subgroup of ℤ⊕ℤ in Hermite normal form.
///
/// HnfMatrix(μ, κ, λ) is the sublattice spanned by (λ, 0) and (κ, μ), i.e. the
/// subgroup generated by a^λ and a^κ b^μ, with 0 ≤ κ < λ and index μλ.
class HnfMatrix {
 public:
  HnfMatrix() : mu_(1), kappa_(0), lambda_(1) {}
  HnfMatrix(BigInt mu, BigInt kappa, BigInt lambda);

  static HnfMatrix identity() { return {}; }

  const BigInt& mu() const noexcept { return mu_; }
  const BigInt& kappa() const noexcept { return kappa_; }
  const BigInt& lambda() const noexcept { return lambda_; }
  BigInt index() const { return mu_ * lambda_; }

  LatticeVector first_basis() const { return {lambda_, 0}; }
  LatticeVector second_basis() const { return {kappa_, mu_}; }
  bool contains(const LatticeVector& v) const;

  std::string to_string() const;

  friend bool operator==(const HnfMatrix& a, const HnfMatrix& b) {
    return a.mu_ == b.mu_ && a.kappa_ == b.kappa_ && a.lambda_ == b.lambda_;
  }
  /// Orders by (λ, κ, μ).
  friend bool operator<(const HnfMatrix& a, const HnfMatrix& b) {
    if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
    if (a.kappa_ != b.kappa_) return a.kappa_ < b.kappa_;
    return a.mu_ < b.mu_;
  }

 private:
  BigInt mu_, kappa_, lambda_;
};

/// The HNF of span_ℤ{v1, v2}. Throws std::invalid_argument if the vectors are dependent.
HnfMatrix hnf_canonicalize(const LatticeVector& v1, const LatticeVector& v2);

/// All HNF matrices of index n, sorted by (λ, κ); there are σ(n) of them.
std::vector<HnfMatrix> hnf_enumerate(const BigInt& n);

/// `inner` read in the basis (a^λ, a^κ b^μ) of `outer`, re-expressed in ℤ⊕ℤ.
HnfMatrix hnf_compose(const HnfMatrix& inner, const HnfMatrix& outer);

/// Stabilizer lattice {(i, j) : x^i y^j fixes basepoint} of an orbit of ⟨x, y⟩.
/// Throws std::invalid_argument if x and y do not commute or `orbit` is not an orbit.
HnfMatrix orbit_hnf(const Permutation& x, const Permutation& y, const Orbit& orbit,
                    std::optional<Point> basepoint = std::nullopt);

/// Modular parameter (μτ + κ)/λ of the covering torus. Requires Im τ > 0.
Complex tau_of(const HnfMatrix& h, Complex tau);

}  // namespace orbifold
