#include "orbifold/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "orbifold/errors.hpp"

namespace orbifold {

Presentation::Presentation(std::string name, std::vector<std::string> generator_names,
                           std::vector<Word> relators, PresentationKind kind,
                           unsigned kind_parameter)
    : name_(std::move(name)),
      generator_names_(std::move(generator_names)),
      relators_(std::move(relators)),
      kind_(kind),
      kind_parameter_(kind_parameter) {
  for (const auto& r : relators_)
    for (const auto& l : r.letters) {
      if (l.generator >= generator_names_.size())
        throw std::invalid_argument("relator letter out of range");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("relator letters carry exponent +1 or -1");
    }
}

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '^') {
      if (w.letters.empty()) throw ParseError("word '" + text + "': '^' without a letter");
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1 || j - i > 6) throw ParseError("word '" + text + "': bad exponent");
      const long n = std::stol(text.substr(i + 1, j - i - 1));
      if (n == 0) {
        w.letters.pop_back();
      } else {
        const Letter l = w.letters.back();
        for (long k = 1; k < n; ++k) w.letters.push_back(l);
      }
      i = j - 1;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("word '" + text + "': unexpected character '" + std::string(1, c) + "'");
    const std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto it = std::find(generator_names.begin(), generator_names.end(), lower);
    if (it == generator_names.end())
      throw ParseError("word '" + text + "': unknown generator '" + lower + "'");
    w.letters.push_back({static_cast<std::uint32_t>(it - generator_names.begin()),
                         std::isupper(static_cast<unsigned char>(c)) ? -1 : 1});
  }
  return w;
}

Presentation Presentation::parse(const std::string& name,
                                 const std::vector<std::string>& generators,
                                 const std::vector<std::string>& relators) {
  for (const auto& g : generators)
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
      throw ParseError("generator names must be single lowercase letters, got '" + g + "'");
  std::vector<std::string> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("duplicate generator name");
  std::vector<Word> words;
  for (const auto& r : relators) words.push_back(parse_word(r, generators));
  return Presentation(name, generators, std::move(words));
}

Presentation Presentation::builtin(const std::string& name) {
  static const std::vector<std::string> letters{"a", "b", "c"};
  if (name == "trivial") return Presentation(name, {}, {}, PresentationKind::Trivial);
  if (name == "Z") return Presentation(name, {"a"}, {}, PresentationKind::Free, 1);
  if (name == "ZxZ")
    return Presentation(name, {"a", "b"}, {parse_word("abAB", {"a", "b"})},
                        PresentationKind::FreeAbelian2);
  if (name == "F2") return Presentation(name, {"a", "b"}, {}, PresentationKind::Free, 2);
  if (name == "F3") return Presentation(name, {"a", "b", "c"}, {}, PresentationKind::Free, 3);
  if (name.size() >= 2 && name[0] == 'C' &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit) && name.size() <= 3) {
    const unsigned m = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (m >= 2 && m <= 12)
      return Presentation(name, {"a"}, {parse_word("a^" + std::to_string(m), {"a"})},
                          PresentationKind::Cyclic, m);
  }
  throw ParseError("unknown built-in presentation '" + name + "'");
}

std::string Presentation::word_to_string(const Word& w) const {
  std::string s;
  for (const auto& l : w.letters) {
    char c = generator_names_[l.generator][0];
    s += l.exponent < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
  }
  return s;
}

Permutation word_evaluate(const Word& w, std::span<const Permutation> images) {
  if (images.empty() && !w.letters.empty())
    throw std::out_of_range("word_evaluate: generator index out of range");
  const std::size_t degree = images.empty() ? 0 : images.front().degree();
  for (const auto& p : images)
    if (p.degree() != degree) throw std::invalid_argument("word_evaluate: degree mismatch");
  Permutation acc(degree);
  for (const auto& l : w.letters) {
    if (l.generator >= images.size())
      throw std::out_of_range("word_evaluate: generator index out of range");
    acc = compose(acc, l.exponent > 0 ? images[l.generator] : images[l.generator].inverse());
  }
  return acc;
}

bool satisfies_relators(const Presentation& p, std::span<const Permutation> images) {
  if (images.size() != p.generator_count())
    throw std::invalid_argument("image count differs from generator count");
  if (images.empty()) return true;
  const std::size_t degree = images.front().degree();
  std::vector<Permutation> inverses;
  for (const auto& g : images) inverses.push_back(g.inverse());
  for (const auto& r : p.relators()) {
    for (Point i = 0; i < degree; ++i) {
      Point x = i;
      for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it)
        x = it->exponent > 0 ? images[it->generator](x) : inverses[it->generator](x);
      if (x != i) return false;
    }
  }
  return true;
}

Homomorphism::Homomorphism(std::shared_ptr<const Presentation> presentation,
                           std::shared_ptr<const PermGroup> target,
                           std::vector<Permutation> images)
    : presentation_(std::move(presentation)),
      target_(std::move(target)),
      images_(std::move(images)),
      degree_(0) {
  if (!presentation_) throw std::invalid_argument("homomorphism without presentation");
  if (images_.size() != presentation_->generator_count())
    throw std::invalid_argument("homomorphism: image count differs from generator count");
  if (!target_) throw std::invalid_argument("homomorphism: null target group");
  degree_ = target_->degree();
  for (const auto& p : images_) {
    if (p.degree() != degree_) throw std::invalid_argument("homomorphism: degree mismatch");
    if (target_ && !target_->contains(p))
      throw std::invalid_argument("homomorphism: image outside the target group");
  }
  if (!satisfies_relators(*presentation_, images_))
    throw std::invalid_argument("homomorphism: relator not mapped to the identity");
}

Homomorphism::Homomorphism(std::shared_ptr<const Presentation> presentation, std::size_t degree,
                           std::vector<Permutation> images)
    : presentation_(std::move(presentation)), images_(std::move(images)), degree_(degree) {
  if (!presentation_) throw std::invalid_argument("homomorphism without presentation");
  if (images_.size() != presentation_->generator_count())
    throw std::invalid_argument("homomorphism: image count differs from generator count");
  for (const auto& p : images_)
    if (p.degree() != degree_) throw std::invalid_argument("homomorphism: degree mismatch");
  if (!satisfies_relators(*presentation_, images_))
    throw std::invalid_argument("homomorphism: relator not mapped to the identity");
}

namespace {

struct RelatorChecker {
  const Presentation& p;
  const std::vector<Permutation>& elems;
  std::vector<std::size_t> inverse_index;

  RelatorChecker(const Presentation& pres, const PermGroup& omega)
      : p(pres), elems(omega.elements()), inverse_index(omega.order()) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      inverse_index[i] = *omega.index_of(elems[i].inverse());
  }

  bool operator()(std::span<const kernels::Index> t) const {
    const std::size_t degree = elems.front().degree();
    for (const auto& r : p.relators())
      for (Point i = 0; i < degree; ++i) {
        Point x = i;
        for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it) {
          const std::size_t e = it->exponent > 0 ? t[it->generator] : inverse_index[t[it->generator]];
          x = elems[e](x);
        }
        if (x != i) return false;
      }
    return true;
  }
};

void check_work(const Presentation& p, const PermGroup& omega, const Bounds& bounds) {
  long double work = std::max<std::size_t>(1, p.relators().size());
  for (std::size_t k = 0; k < p.generator_count(); ++k) work *= omega.order();
  if (work > static_cast<long double>(bounds.max_word_evals))
    throw BoundExceeded("homomorphism enumeration exceeds work bound of " +
                        std::to_string(bounds.max_word_evals) + " word evaluations");
}

}  // namespace

std::vector<kernels::Tuple> enumerate_hom_tuples(const Presentation& p, const PermGroup& omega,
                                                 const Bounds& bounds) {
  check_work(p, omega, bounds);
  RelatorChecker check(p, omega);
  return kernels::filter_tuples(omega.order(), p.generator_count(), std::cref(check));
}

std::vector<Homomorphism> enumerate_homs(std::shared_ptr<const Presentation> p,
                                         std::shared_ptr<const PermGroup> omega,
                                         const Bounds& bounds) {
  const auto tuples = enumerate_hom_tuples(*p, *omega, bounds);
  std::vector<Homomorphism> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::vector<Permutation> images;
    for (auto i : t) images.push_back(omega->elements()[i]);
    out.emplace_back(p, omega, std::move(images));
  }
  return out;
}

std::uint64_t count_homs(const Presentation& p, const PermGroup& omega, const Bounds& bounds) {
  check_work(p, omega, bounds);
  RelatorChecker check(p, omega);
  return kernels::count_tuples(omega.order(), p.generator_count(), std::cref(check));
}

std::uint64_t count_hom_failures(const Presentation& p, const PermGroup& omega,
                                 const std::function<bool(std::span<const Permutation>)>& check,
                                 const Bounds& bounds) {
  check_work(p, omega, bounds);
  RelatorChecker relators(p, omega);
  const auto& elems = omega.elements();
  return kernels::count_tuples(
      omega.order(), p.generator_count(), [&](std::span<const kernels::Index> t) {
        if (!relators(t)) return false;
        std::vector<Permutation> images;
        images.reserve(t.size());
        for (auto i : t) images.push_back(elems[i]);
        return !check(images);
      });
}

TransitiveAction orbit_stabilizer_action(const Homomorphism& phi, const Orbit& orbit,
                                         std::optional<Point> basepoint) {
  if (orbit.empty()) throw std::invalid_argument("empty orbit");
  const Point base = basepoint.value_or(orbit.front());
  auto pos = std::lower_bound(orbit.begin(), orbit.end(), base);
  if (pos == orbit.end() || *pos != base)
    throw std::invalid_argument("basepoint does not lie in the orbit");

  std::vector<Point> label(phi.degree(), static_cast<Point>(-1));
  for (std::size_t k = 0; k < orbit.size(); ++k) label[orbit[k]] = static_cast<Point>(k);
  std::vector<Permutation> images;
  for (const auto& g : phi.images()) {
    std::vector<Point> img(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Point to = label[g(orbit[k])];
      if (to == static_cast<Point>(-1)) throw std::invalid_argument("points do not form an orbit");
      img[k] = to;
    }
    images.emplace_back(std::move(img));
  }
  if (orbifold::orbits(images, orbit.size()).size() != 1)
    throw std::invalid_argument("points do not form a single orbit");
  return TransitiveAction{Homomorphism(phi.presentation_ptr(), orbit.size(), std::move(images)),
                          static_cast<Point>(pos - orbit.begin()), orbit};
}

std::optional<Permutation> actions_equivalent(const Homomorphism& phi1,
                                              const Homomorphism& phi2) {
  if (phi1.presentation().generator_count() != phi2.presentation().generator_count())
    throw std::invalid_argument("actions_equivalent: different presentations");
  if (phi1.degree() != phi2.degree()) return std::nullopt;
  return conjugating_permutation(phi1.images(), phi2.images(), phi1.degree());
}

std::optional<Permutation> actions_equivalent(const TransitiveAction& t1,
                                              const TransitiveAction& t2) {
  return actions_equivalent(t1.action, t2.action);
}

ActionDecomposition decompose_transitives(const Homomorphism& phi) {
  ActionDecomposition out;
  for (const auto& orbit : phi.orbits()) {
    TransitiveAction t = orbit_stabilizer_action(phi, orbit);
    auto it = std::find_if(out.constituents.begin(), out.constituents.end(),
                           [&](const Constituent& c) {
                             return c.action.degree() == t.degree() &&
                                    actions_equivalent(c.action, t).has_value();
                           });
    if (it != out.constituents.end())
      ++it->multiplicity;
    else
      out.constituents.push_back({std::move(t), 1});
  }
  return out;
}

}  // namespace orbifold
