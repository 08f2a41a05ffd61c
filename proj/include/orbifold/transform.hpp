#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orbifold/class_function.hpp"
#include "orbifold/fpgroup.hpp"
#include "orbifold/lattice.hpp"
#include "orbifold/perm_group.hpp"

namespace orbifold {

struct TransformOptions {
  Bounds bounds = default_bounds();
  double rel_tol = 1e-9;  // numeric comparisons between the two evaluation routes
  bool audit = false;     // keep per-homomorphism orbit summaries
};

struct OrbitSummary {
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::string> handles;
};

/// Z≀Ω evaluated at a subgroup.
struct TransformResult {
  RingElem value;
  std::uint64_t hom_count = 0;
  std::vector<OrbitSummary> audit;
};

/// (1/|Ω|) Σ_{φ: G→Ω} Π_{ξ ∈ O(φ)} Z(H_ξ), evaluated at H = G.
/// H_ξ is handed to Z as the transitive action on ξ (basepoint = min ξ).
TransformResult transform_at_G(std::shared_ptr<const Presentation> g, const ClassFunction& z,
                               const PermGroup& omega, const TransformOptions& opts = {});

/// z_n^Ω for G = ℤ. Computed as a direct element sum and by substituting
/// t_k ↦ z_{kn} into the cycle indicator; throws ConsistencyError if they differ.
RingElem transform_Z(const ClassFunction& z, const PermGroup& omega, const BigInt& n,
                     const TransformOptions& opts = {});

/// (Z≀Ω)(H) for G = ℤ⊕ℤ: (1/|Ω|) Σ_{xy=yx} Π_ξ Z(H_ξ H).
RingElem transform_ZZ(const ClassFunction& z, const PermGroup& omega, const HnfMatrix& h,
                      const TransformOptions& opts = {});
/// Same sum without the parallel kernels.
RingElem transform_ZZ_serial(const ClassFunction& z, const PermGroup& omega, const HnfMatrix& h,
                             const TransformOptions& opts = {});

/// Z≀Ω as a class function of the same domain (Z or ZxZ), values memoized.
ClassFunction transformed(const ClassFunction& z, std::shared_ptr<const PermGroup> omega,
                          const TransformOptions& opts = {});

struct TransitivityReport {
  Domain domain = Domain::Z;
  RingElem lhs;  // (Z≀Ω1)≀Ω2
  RingElem rhs;  // Z≀(Ω1≀Ω2)
  bool equal = false;
};

/// Both sides of (Z≀Ω1)≀Ω2 = Z≀(Ω1≀Ω2) at the full group.
TransitivityReport transitivity_check(const ClassFunction& z, const PermGroup& omega1,
                                      const PermGroup& omega2, const TransformOptions& opts = {});

struct HomCountReport {
  BigInt direct;    // #Hom(G, Ω1≀Ω2) by enumeration
  BigInt factored;  // Σ_ω Π_η |Ω1|^{|η|-1} #Hom(G_η, Ω1)
  bool equal() const { return direct == factored; }
};

/// Throws std::invalid_argument for presentations whose orbit stabilizers are
/// not known in closed form (only trivial, free and ℤ⊕ℤ are supported).
HomCountReport wreath_hom_count_check(const Presentation& g, const PermGroup& omega1,
                                      const PermGroup& omega2,
                                      const Bounds& bounds = default_bounds());

struct OrbitStructureVerdict {
  bool pass = true;
  std::string detail;
};

/// For a homomorphism into Ω1≀Ω2 (base degree = deg Ω1), rebuilds the
/// crossed homomorphism from its (Φ_η, φ_η) data and checks that the orbits
/// are exactly {(φ_η(y)x, y) : x ∈ ξ, y ∈ η} with ξ an orbit of Φ_η(G_η).
OrbitStructureVerdict orbit_structure_check(std::span<const Permutation> images,
                                            std::size_t degree, std::size_t base_degree);
OrbitStructureVerdict orbit_structure_check(const Homomorphism& phi, std::size_t base_degree);

}  // namespace orbifold
