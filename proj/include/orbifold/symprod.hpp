#pragma once

#include <vector>

#include "orbifold/class_function.hpp"
#include "orbifold/cycle_index.hpp"
#include "orbifold/series.hpp"
#include "orbifold/transform.hpp"

namespace orbifold {

/// P_1 … P_N: the p^n coefficients of exp(Σ_n p^n t_n / n).
std::vector<Poly> schur_polynomials(unsigned n_max);

/// Z^[n](G) = Σ_{[G:H] = n} Z(H) for G = ℤ or ℤ⊕ℤ.
RingElem hecke_sum(const ClassFunction& z, const BigInt& n);

/// Z_n(G) = (Z≀S_n)(G), computed directly and as P_n(Z^[1], …, Z^[n]);
/// throws ConsistencyError if the two disagree. Z_0 = 1.
RingElem symmetric_product(const ClassFunction& z, unsigned n, const TransformOptions& opts = {});

struct ExpoidReport {
  TruncatedSeries lhs;  // Σ_n p^n Z_n(G)
  TruncatedSeries rhs;  // exp(Σ_n p^n Z^[n](G) / n)
  bool equal = false;
};

/// Both sides of the exponential identity through order p^N.
ExpoidReport expoid_verify(const ClassFunction& z, unsigned order,
                           const TransformOptions& opts = {});

}  // namespace orbifold
