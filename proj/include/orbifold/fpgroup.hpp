#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbifold/bounds.hpp"
#include "orbifold/kernels.hpp"
#include "orbifold/perm_group.hpp"

namespace orbifold {

/// A generator or its inverse.
struct Letter {
  std::uint32_t generator = 0;
  int exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// Word in the generators; powers are expanded into ±1 letters.
struct Word {
  std::vector<Letter> letters;
  bool operator==(const Word&) const = default;
};

/// Shapes of presentation for which finite-index subgroups are known in closed form.
enum class PresentationKind { Trivial, Free, FreeAbelian2, Cyclic, Custom };

class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> generator_names,
               std::vector<Word> relators, PresentationKind kind = PresentationKind::Custom,
               unsigned kind_parameter = 0);

  /// "trivial", "Z", "ZxZ", "F2", "F3", "C2".."C12".
  static Presentation builtin(const std::string& name);

  /// Generators are single lowercase letters; uppercase denotes the inverse and
  /// a trailing ^n repeats the preceding letter, e.g. "abAB", "a^5".
  static Presentation parse(const std::string& name, const std::vector<std::string>& generators,
                            const std::vector<std::string>& relators);

  const std::string& name() const noexcept { return name_; }
  std::size_t generator_count() const noexcept { return generator_names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  PresentationKind kind() const noexcept { return kind_; }
  /// Rank for Free, order for Cyclic, otherwise 0.
  unsigned kind_parameter() const noexcept { return kind_parameter_; }

  std::string word_to_string(const Word& w) const;

  bool operator==(const Presentation& o) const {
    return name_ == o.name_ && generator_names_ == o.generator_names_ && relators_ == o.relators_;
  }

 private:
  std::string name_;
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
  PresentationKind kind_;
  unsigned kind_parameter_;
};

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);

/// Product of images in letter order under (p∘q)(i) = p(q(i)).
Permutation word_evaluate(const Word& w, std::span<const Permutation> images);

/// φ: G → Ω given by generator images. A null target stands for S_degree.
class Homomorphism {
 public:
  /// Throws std::invalid_argument if a relator is violated or an image lies outside the target.
  Homomorphism(std::shared_ptr<const Presentation> presentation,
               std::shared_ptr<const PermGroup> target, std::vector<Permutation> images);
  /// Homomorphism into S_degree (target left implicit).
  Homomorphism(std::shared_ptr<const Presentation> presentation, std::size_t degree,
               std::vector<Permutation> images);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const noexcept {
    return presentation_;
  }
  const std::shared_ptr<const PermGroup>& target() const noexcept { return target_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }
  std::size_t degree() const noexcept { return degree_; }

  Permutation evaluate(const Word& w) const { return word_evaluate(w, images_); }
  std::vector<Orbit> orbits() const { return orbifold::orbits(images_, degree_); }

 private:
  std::shared_ptr<const Presentation> presentation_;
  std::shared_ptr<const PermGroup> target_;
  std::vector<Permutation> images_;
  std::size_t degree_;
};

/// Transitive action on one orbit; the handle for the point stabilizer H_ξ.
struct TransitiveAction {
  Homomorphism action;          // image has exactly one orbit
  Point basepoint = 0;          // in relabeled coordinates
  std::vector<Point> relabel;   // relabel[new] = original point, increasing

  std::size_t degree() const noexcept { return action.degree(); }
};

bool satisfies_relators(const Presentation& p, std::span<const Permutation> images);

/// Index tuples into omega.elements() that define homomorphisms, lexicographic.
std::vector<kernels::Tuple> enumerate_hom_tuples(const Presentation& p, const PermGroup& omega,
                                                 const Bounds& bounds = default_bounds());
std::vector<Homomorphism> enumerate_homs(std::shared_ptr<const Presentation> p,
                                         std::shared_ptr<const PermGroup> omega,
                                         const Bounds& bounds = default_bounds());
std::uint64_t count_homs(const Presentation& p, const PermGroup& omega,
                         const Bounds& bounds = default_bounds());
/// Number of homomorphisms for which `check` fails.
std::uint64_t count_hom_failures(
    const Presentation& p, const PermGroup& omega,
    const std::function<bool(std::span<const Permutation>)>& check,
    const Bounds& bounds = default_bounds());

/// Restriction of φ to `orbit`, points relabeled in increasing order.
TransitiveAction orbit_stabilizer_action(const Homomorphism& phi, const Orbit& orbit,
                                         std::optional<Point> basepoint = std::nullopt);

/// α with φ2(g) = α⁻¹φ1(g)α for every generator g, if the actions are equivalent.
std::optional<Permutation> actions_equivalent(const Homomorphism& phi1, const Homomorphism& phi2);
std::optional<Permutation> actions_equivalent(const TransitiveAction& t1,
                                              const TransitiveAction& t2);

struct Constituent {
  TransitiveAction action;
  std::size_t multiplicity = 0;
};

/// Pairwise inequivalent transitive constituents in order of first orbit.
struct ActionDecomposition {
  std::vector<Constituent> constituents;
};

ActionDecomposition decompose_transitives(const Homomorphism& phi);

}  // namespace orbifold
