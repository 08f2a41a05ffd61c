#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/bounds.hpp"
#include "orbifold/permutation.hpp"

namespace orbifold {

using Orbit = std::vector<Point>;

/// Finite permutation group with its full element set enumerated at construction.
///
/// Elements are kept in lexicographic order of their image arrays, so the
/// identity is always elements()[0] and every index-based output is stable.
class PermGroup {
 public:
  /// Breadth-first closure of `generators`; an empty list yields the trivial group.
  static PermGroup closure(std::vector<Permutation> generators, std::size_t degree,
                           const Bounds& bounds = default_bounds());

  /// Wraps an element set that the caller guarantees to be a group.
  /// If `generators` is empty a small generating set is extracted.
  static PermGroup from_elements(std::vector<Permutation> elements, std::size_t degree,
                                 std::vector<Permutation> generators = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::string& name() const noexcept { return name_; }
  PermGroup& set_name(std::string name) & {
    name_ = std::move(name);
    return *this;
  }
  PermGroup&& set_name(std::string name) && {
    name_ = std::move(name);
    return std::move(*this);
  }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::string name_;
};

PermGroup trivial_group(std::size_t degree = 1);
PermGroup symmetric_group(std::size_t n, const Bounds& bounds = default_bounds());
PermGroup cyclic_group(std::size_t n);
PermGroup alternating_group(std::size_t n, const Bounds& bounds = default_bounds());
PermGroup dihedral_group(std::size_t n);

/// Parses "trivial", "trivial:d", "Sn", "Cn", "An", "Dn".
PermGroup builtin_group(const std::string& name, const Bounds& bounds = default_bounds());

/// Orbits of the group generated by `perms`, each sorted, ordered by minimal point.
std::vector<Orbit> orbits(std::span<const Permutation> perms, std::size_t degree);

/// Ordered pairs of element indices (i, j) of commuting elements, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs(const PermGroup& group);

/// The subgroup of S_degree commuting with every element of `perms` (brute force over S_degree).
PermGroup centralizer_in_sym(std::span<const Permutation> perms, std::size_t degree,
                             const Bounds& bounds = default_bounds());

/// Ω1≀Ω2 acting on X×Y, point (x, y) encoded as x + y·deg(Ω1).
PermGroup wreath_product(const PermGroup& base, const PermGroup& top,
                         const Bounds& bounds = default_bounds());

/// Builds λ≀ω: (x, y) ↦ (λ(y)x, ωy) with λ given as one Ω1-element per point of Y.
Permutation wreath_element(std::span<const Permutation> lambda, const Permutation& omega);

/// A permutation α with b[g] = α⁻¹·a[g]·α for every g, or nothing.
/// Points are matched orbit by orbit; the first witness in candidate order is returned.
std::optional<Permutation> conjugating_permutation(std::span<const Permutation> a,
                                                   std::span<const Permutation> b,
                                                   std::size_t degree);

std::uint64_t factorial(unsigned n);

}  // namespace orbifold
