#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orbifold/fpgroup.hpp"
#include "orbifold/lattice.hpp"
#include "orbifold/ring.hpp"

namespace orbifold {

/// Which kind of subgroup handle a class function accepts.
enum class Domain { Z, ZxZ, General };

std::string to_string(Domain d);
Domain parse_domain(const std::string& s);

/// Values on explicitly registered conjugacy classes of finite-index subgroups,
/// each class represented by a transitive action.
class ActionTable {
 public:
  struct Entry {
    std::string key;
    TransitiveAction representative;
    RingElem value;
  };

  /// Throws std::invalid_argument when `key` is already bound, or when an
  /// equivalent action is already registered under another key.
  void add(std::string key, TransitiveAction representative, RingElem value);

  /// Throws UnregisteredClass if no registered action is equivalent to `handle`.
  const RingElem& lookup(const TransitiveAction& handle) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// A map from finite-index subgroups to the coefficient ring, constant on
/// conjugacy classes.
class ClassFunction {
 public:
  using SequenceRule = std::function<RingElem(const BigInt&)>;
  using LatticeRule = std::function<RingElem(const HnfMatrix&)>;

  /// nℤ ↦ z_n.
  static ClassFunction symbolic_sequence();
  static ClassFunction sequence(SequenceRule rule, std::string description);
  /// H ↦ z_{μ,κ,λ}.
  static ClassFunction symbolic_lattice();
  static ClassFunction lattice(LatticeRule rule, std::string description);
  /// H ↦ f(τ(H)) where τ(H) = (μτ + κ)/λ.
  static ClassFunction numeric_lattice(std::function<Complex(Complex)> f, Complex tau,
                                       std::string description = "numeric");
  static ClassFunction table(std::shared_ptr<const ActionTable> table);
  static ClassFunction constant(Domain domain, RingElem value);

  Domain domain() const noexcept { return domain_; }
  const std::string& description() const noexcept { return description_; }

  /// Value on the index-n subgroup of ℤ.
  RingElem value(const BigInt& n) const;
  /// Value on an HNF subgroup of ℤ⊕ℤ.
  RingElem value(const HnfMatrix& h) const;
  /// Value on the stabilizer of the basepoint of a transitive action. For the
  /// ℤ and ℤ⊕ℤ domains the handle is translated to an index or an HNF.
  RingElem value(const TransitiveAction& handle) const;

  /// Same function with values cached; safe for concurrent use.
  ClassFunction memoized() const;

 private:
  ClassFunction() = default;

  Domain domain_ = Domain::General;
  std::string description_;
  SequenceRule sequence_;
  LatticeRule lattice_;
  std::shared_ptr<const ActionTable> table_;
  std::shared_ptr<const RingElem> constant_;
};

RingElem cf_value(const ClassFunction& z, const BigInt& n);
RingElem cf_value(const ClassFunction& z, const HnfMatrix& h);
RingElem cf_value(const ClassFunction& z, const TransitiveAction& handle);

}  // namespace orbifold
