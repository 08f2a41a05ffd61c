#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orbifold/numeric.hpp"
#include "orbifold/perm_group.hpp"
#include "orbifold/transform.hpp"

namespace orbifold {

using TorusInvariant = std::function<Complex(Complex)>;

/// Coefficients c_{-1}, c_0, …, c_M of j(q) = Σ c_n q^n, from E_4^3 / Δ.
std::vector<BigInt> klein_j_coefficients(unsigned order);

/// j(τ) truncated at q^M.
class KleinJ {
 public:
  explicit KleinJ(unsigned order = 20);
  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size()) - 2; }
  Complex operator()(Complex tau) const;

 private:
  std::vector<double> coeffs_;
};

/// "constant" (Z ≡ 1) or "klein-j" truncated at `order`.
TorusInvariant builtin_invariant(const std::string& name, unsigned order = 20);

/// Z^Ω(τ) = (1/|Ω|) Σ_{xy=yx} Π_ξ f(τ(H_ξ)).
Complex torus_partition_function(const PermGroup& omega, const TorusInvariant& f, Complex tau,
                                 const TransformOptions& opts = {});

}  // namespace orbifold
