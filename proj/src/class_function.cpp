#include "orbifold/class_function.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "orbifold/errors.hpp"

namespace orbifold {

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Z: return "Z";
    case Domain::ZxZ: return "ZxZ";
    case Domain::General: return "general";
  }
  return "general";
}

Domain parse_domain(const std::string& s) {
  if (s == "Z") return Domain::Z;
  if (s == "ZxZ") return Domain::ZxZ;
  if (s == "general") return Domain::General;
  throw ParseError("unknown domain '" + s + "' (expected Z, ZxZ or general)");
}

void ActionTable::add(std::string key, TransitiveAction representative, RingElem value) {
  if (orbits(representative.action.images(), representative.degree()).size() != 1)
    throw std::invalid_argument("table representative is not transitive");
  for (const auto& e : entries_) {
    if (e.representative.action.presentation().generator_count() !=
        representative.action.presentation().generator_count())
      throw std::invalid_argument("table mixes presentations");
    const bool equivalent = actions_equivalent(e.representative, representative).has_value();
    if (e.key == key)
      throw std::invalid_argument(equivalent ? "class '" + key + "' is already registered"
                                             : "key '" + key + "' is bound to an inequivalent action");
    if (equivalent)
      throw std::invalid_argument("action is already registered under key '" + e.key + "'");
  }
  entries_.push_back({std::move(key), std::move(representative), std::move(value)});
}

const RingElem& ActionTable::lookup(const TransitiveAction& handle) const {
  for (const auto& e : entries_)
    if (e.representative.degree() == handle.degree() &&
        actions_equivalent(e.representative, handle))
      return e.value;
  throw UnregisteredClass("no registered class for a transitive action of degree " +
                          std::to_string(handle.degree()));
}

ClassFunction ClassFunction::symbolic_sequence() {
  return sequence([](const BigInt& n) { return RingElem(Variable::z(n)); }, "symbolic");
}

ClassFunction ClassFunction::sequence(SequenceRule rule, std::string description) {
  ClassFunction f;
  f.domain_ = Domain::Z;
  f.sequence_ = std::move(rule);
  f.description_ = std::move(description);
  return f;
}

ClassFunction ClassFunction::symbolic_lattice() {
  return lattice([](const HnfMatrix& h) { return RingElem(Variable::z(h)); }, "symbolic");
}

ClassFunction ClassFunction::lattice(LatticeRule rule, std::string description) {
  ClassFunction f;
  f.domain_ = Domain::ZxZ;
  f.lattice_ = std::move(rule);
  f.description_ = std::move(description);
  return f;
}

ClassFunction ClassFunction::numeric_lattice(std::function<Complex(Complex)> fn, Complex tau,
                                             std::string description) {
  if (!(tau.imag() > 0)) throw std::invalid_argument("numeric class function: Im tau must be > 0");
  return lattice([fn = std::move(fn), tau](const HnfMatrix& h) { return RingElem(fn(tau_of(h, tau))); },
                 std::move(description));
}

ClassFunction ClassFunction::table(std::shared_ptr<const ActionTable> t) {
  if (!t) throw std::invalid_argument("null action table");
  ClassFunction f;
  f.domain_ = Domain::General;
  f.table_ = std::move(t);
  f.description_ = "table";
  return f;
}

ClassFunction ClassFunction::constant(Domain domain, RingElem value) {
  ClassFunction f;
  f.domain_ = domain;
  f.constant_ = std::make_shared<const RingElem>(std::move(value));
  f.description_ = "constant";
  return f;
}

RingElem ClassFunction::value(const BigInt& n) const {
  if (domain_ != Domain::Z) throw std::invalid_argument("index handle used on a non-Z class function");
  if (n < 1) throw std::invalid_argument("subgroup index must be positive");
  return constant_ ? *constant_ : sequence_(n);
}

RingElem ClassFunction::value(const HnfMatrix& h) const {
  if (domain_ != Domain::ZxZ)
    throw std::invalid_argument("HNF handle used on a non-ZxZ class function");
  return constant_ ? *constant_ : lattice_(h);
}

RingElem ClassFunction::value(const TransitiveAction& handle) const {
  const auto& pres = handle.action.presentation();
  switch (domain_) {
    case Domain::Z:
      if (pres.generator_count() != 1 || !pres.relators().empty())
        throw std::invalid_argument("Z class function needs an action of the free cyclic group");
      return value(BigInt(handle.degree()));
    case Domain::ZxZ: {
      if (pres.kind() != PresentationKind::FreeAbelian2)
        throw std::invalid_argument("ZxZ class function needs an action of ZxZ");
      Orbit all(handle.degree());
      for (Point i = 0; i < all.size(); ++i) all[i] = i;
      const auto& im = handle.action.images();
      return value(orbit_hnf(im[0], im[1], all, handle.basepoint));
    }
    case Domain::General:
      if (constant_) return *constant_;
      return table_->lookup(handle);
  }
  throw std::logic_error("unreachable");
}

ClassFunction ClassFunction::memoized() const {
  ClassFunction f = *this;
  if (constant_ || domain_ == Domain::General) return f;
  struct Cache {
    std::mutex mutex;
    std::map<BigInt, RingElem> by_index;
    std::map<HnfMatrix, RingElem> by_hnf;
  };
  auto cache = std::make_shared<Cache>();
  if (domain_ == Domain::Z) {
    f.sequence_ = [cache, rule = sequence_](const BigInt& n) {
      {
        std::lock_guard lock(cache->mutex);
        if (auto it = cache->by_index.find(n); it != cache->by_index.end()) return it->second;
      }
      RingElem v = rule(n);
      std::lock_guard lock(cache->mutex);
      return cache->by_index.emplace(n, std::move(v)).first->second;
    };
  } else {
    f.lattice_ = [cache, rule = lattice_](const HnfMatrix& h) {
      {
        std::lock_guard lock(cache->mutex);
        if (auto it = cache->by_hnf.find(h); it != cache->by_hnf.end()) return it->second;
      }
      RingElem v = rule(h);
      std::lock_guard lock(cache->mutex);
      return cache->by_hnf.emplace(h, std::move(v)).first->second;
    };
  }
  return f;
}

RingElem cf_value(const ClassFunction& z, const BigInt& n) { return z.value(n); }
RingElem cf_value(const ClassFunction& z, const HnfMatrix& h) { return z.value(h); }
RingElem cf_value(const ClassFunction& z, const TransitiveAction& handle) { return z.value(handle); }

}  // namespace orbifold
