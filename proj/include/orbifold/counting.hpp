#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbifold/class_function.hpp"
#include "orbifold/fpgroup.hpp"

namespace orbifold {

/// ℓ = [N_G(G_i) : G_i], computed as the order of the centralizer of the
/// transitive image in the symmetric group on the orbit.
std::uint64_t transitive_centralizer_order(const TransitiveAction& tau,
                                           const Bounds& bounds = default_bounds());

/// Π_i n_i! ℓ_i^{n_i} over the transitive constituents of φ.
BigInt centralizer_order_formula(const Homomorphism& phi, const Bounds& bounds = default_bounds());

/// #[φ] = n! / Π_i n_i! ℓ_i^{n_i}.
BigInt class_size(const Homomorphism& phi, const Bounds& bounds = default_bounds());

/// [S_n : C[φ]] with the centralizer found by brute force.
BigInt class_size_by_centralizer(const Homomorphism& phi, const Bounds& bounds = default_bounds());

struct ConstituentSummary {
  std::size_t multiplicity = 0;
  std::size_t degree = 0;
  std::uint64_t ell = 0;
};

struct CensusClass {
  Homomorphism representative;
  std::vector<ConstituentSummary> decomposition;
  BigInt predicted_size;
  std::uint64_t observed_size = 0;
};

struct ClassCensus {
  std::shared_ptr<const Presentation> presentation;
  std::size_t degree = 0;
  std::uint64_t hom_count = 0;
  std::vector<CensusClass> classes;  // ordered by first occurrence in enumeration order
};

/// Partitions Hom(G, S_n) into equivalence classes of permutation actions.
ClassCensus census(std::shared_ptr<const Presentation> g, std::size_t n,
                   const Bounds& bounds = default_bounds());

/// (1/n!) Σ_classes #[φ] Π_i Z(G_i)^{n_i}; equals Z_n(G) by the class-size formula.
RingElem census_transform_sum(const ClassCensus& c, const ClassFunction& z);

/// Tab-separated rows: class, representative, decomposition, ell, predicted, observed.
std::string census_tsv(const ClassCensus& c);

}  // namespace orbifold
