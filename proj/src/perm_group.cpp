#include "orbifold/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "orbifold/errors.hpp"
#include "orbifold/kernels.hpp"

namespace orbifold {

namespace {

void check_degrees(std::span<const Permutation> perms, std::size_t degree) {
  for (const auto& p : perms)
    if (p.degree() != degree) throw std::invalid_argument("permutation degree mismatch");
}

std::vector<Permutation> close_under(const std::vector<Permutation>& gens, std::size_t degree,
                                     std::uint64_t bound) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(g, queue[head]);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw BoundExceeded("group closure exceeds element bound of " + std::to_string(bound));
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

PermGroup PermGroup::closure(std::vector<Permutation> generators, std::size_t degree,
                             const Bounds& bounds) {
  check_degrees(generators, degree);
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = close_under(generators, degree, bounds.max_elements);
  g.generators_ = std::move(generators);
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements, std::size_t degree,
                                   std::vector<Permutation> generators) {
  check_degrees(elements, degree);
  check_degrees(generators, degree);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw std::invalid_argument("element set does not contain the identity");
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  if (generators.empty()) {
    // Greedy: add the smallest element outside the current subgroup.
    std::vector<Permutation> span{Permutation(degree)};
    for (const auto& e : g.elements_) {
      if (std::binary_search(span.begin(), span.end(), e)) continue;
      generators.push_back(e);
      span = close_under(generators, degree, g.elements_.size());
    }
  }
  g.generators_ = std::move(generators);
  return g;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw BoundExceeded("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

PermGroup trivial_group(std::size_t degree) {
  return PermGroup::closure({}, degree).set_name(degree == 1 ? "trivial"
                                                             : "trivial:" + std::to_string(degree));
}

PermGroup symmetric_group(std::size_t n, const Bounds& bounds) {
  if (n == 0) throw std::invalid_argument("symmetric group of degree 0");
  if (n > 20 || factorial(static_cast<unsigned>(n)) > bounds.max_elements)
    throw BoundExceeded("S_" + std::to_string(n) + " exceeds the element bound");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<Point>>{cyc}));
  }
  return PermGroup::closure(std::move(gens), n, bounds).set_name("S" + std::to_string(n));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of degree 0");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<Point>>{cyc}));
  return PermGroup::closure(std::move(gens), n).set_name("C" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n, const Bounds& bounds) {
  if (n == 0) throw std::invalid_argument("alternating group of degree 0");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup::closure(std::move(gens), n, bounds).set_name("A" + std::to_string(n));
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs at least 3 points");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup::closure({Permutation(rot), Permutation(refl)}, n)
      .set_name("D" + std::to_string(n));
}

PermGroup builtin_group(const std::string& name, const Bounds& bounds) {
  if (name == "trivial") return trivial_group(1);
  auto number = [&](std::size_t from) -> std::size_t {
    const std::string digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
        digits.size() > 6)
      throw ParseError("unknown group name '" + name + "'");
    return std::stoul(digits);
  };
  if (name.rfind("trivial:", 0) == 0) return trivial_group(number(8));
  if (name.size() < 2) throw ParseError("unknown group name '" + name + "'");
  switch (name[0]) {
    case 'S': return symmetric_group(number(1), bounds);
    case 'C': return cyclic_group(number(1));
    case 'A': return alternating_group(number(1), bounds);
    case 'D': return dihedral_group(number(1));
    default: throw ParseError("unknown group name '" + name + "'");
  }
}

std::vector<Orbit> orbits(std::span<const Permutation> perms, std::size_t degree) {
  check_degrees(perms, degree);
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms)
    for (Point i = 0; i < degree; ++i) {
      Point a = find(i), b = find(p(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<Orbit> out;
  std::vector<std::size_t> slot(degree, SIZE_MAX);
  for (Point i = 0; i < degree; ++i) {
    Point r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs(const PermGroup& group) {
  auto raw = kernels::commuting_pairs(group.elements());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(raw.size());
  for (auto [i, j] : raw) out.emplace_back(i, j);
  return out;
}

PermGroup centralizer_in_sym(std::span<const Permutation> perms, std::size_t degree,
                             const Bounds& bounds) {
  check_degrees(perms, degree);
  if (degree > 20 || factorial(static_cast<unsigned>(degree)) > bounds.max_elements)
    throw BoundExceeded("S_" + std::to_string(degree) + " exceeds the element bound");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> found;
  do {
    Permutation alpha(img);
    if (std::all_of(perms.begin(), perms.end(),
                    [&](const Permutation& p) { return commute(alpha, p); }))
      found.push_back(std::move(alpha));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(std::move(found), degree);
}

Permutation wreath_element(std::span<const Permutation> lambda, const Permutation& omega) {
  if (lambda.size() != omega.degree())
    throw std::invalid_argument("wreath element: need one base element per top point");
  const std::size_t d1 = lambda.empty() ? 0 : lambda.front().degree();
  std::vector<Point> img(d1 * lambda.size());
  for (Point y = 0; y < lambda.size(); ++y) {
    if (lambda[y].degree() != d1) throw std::invalid_argument("wreath element: degree mismatch");
    for (Point x = 0; x < d1; ++x)
      img[x + y * d1] = lambda[y](x) + omega(y) * static_cast<Point>(d1);
  }
  return Permutation(std::move(img));
}

PermGroup wreath_product(const PermGroup& base, const PermGroup& top, const Bounds& bounds) {
  const std::size_t d1 = base.degree(), d2 = top.degree();
  long double predicted = static_cast<long double>(top.order());
  for (std::size_t i = 0; i < d2; ++i) predicted *= static_cast<long double>(base.order());
  if (predicted > static_cast<long double>(bounds.max_elements))
    throw BoundExceeded("wreath product order exceeds element bound");

  const auto& be = base.elements();
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(predicted));
  std::vector<std::size_t> digits(d2, 0);
  std::vector<Permutation> lambda(d2, be.front());
  for (;;) {
    for (const auto& omega : top.elements()) elements.push_back(wreath_element(lambda, omega));
    std::size_t k = 0;
    for (; k < d2; ++k) {
      if (++digits[k] < be.size()) {
        lambda[k] = be[digits[k]];
        break;
      }
      digits[k] = 0;
      lambda[k] = be.front();
    }
    if (k == d2) break;
  }

  std::vector<Permutation> gens;
  const Permutation base_id(d1);
  for (const auto& w : top.generators())
    gens.push_back(wreath_element(std::vector<Permutation>(d2, base_id), w));
  for (const auto& g : base.generators())
    for (std::size_t y = 0; y < d2; ++y) {
      std::vector<Permutation> l(d2, base_id);
      l[y] = g;
      gens.push_back(wreath_element(l, Permutation(d2)));
    }
  auto name = "(" + base.name() + " wr " + top.name() + ")";
  return PermGroup::from_elements(std::move(elements), d1 * d2, std::move(gens))
      .set_name(std::move(name));
}

std::optional<Permutation> conjugating_permutation(std::span<const Permutation> a,
                                                   std::span<const Permutation> b,
                                                   std::size_t degree) {
  if (a.size() != b.size()) throw std::invalid_argument("generator tuples differ in length");
  check_degrees(a, degree);
  check_degrees(b, degree);
  for (std::size_t g = 0; g < a.size(); ++g)
    if (a[g].cycle_type() != b[g].cycle_type()) return std::nullopt;

  const auto orbits_a = orbits(a, degree);
  const auto orbits_b = orbits(b, degree);
  auto sizes = [](const std::vector<Orbit>& os) {
    std::vector<std::size_t> s;
    for (const auto& o : os) s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(orbits_a) != sizes(orbits_b)) return std::nullopt;

  std::vector<std::size_t> orbit_size_a(degree);
  for (const auto& o : orbits_a)
    for (Point p : o) orbit_size_a[p] = o.size();

  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> alpha(degree, unset);
  std::vector<bool> used(degree, false);

  // alpha(b_g(q)) must equal a_g(alpha(q)); propagate from alpha(start) = target.
  auto try_assign = [&](Point start, Point target, std::vector<Point>& assigned) {
    alpha[start] = target;
    used[target] = true;
    assigned.push_back(start);
    for (std::size_t head = 0; head < assigned.size(); ++head) {
      const Point q = assigned[head];
      for (std::size_t g = 0; g < a.size(); ++g) {
        const Point qn = b[g](q), want = a[g](alpha[q]);
        if (alpha[qn] == unset) {
          if (used[want]) return false;
          alpha[qn] = want;
          used[want] = true;
          assigned.push_back(qn);
        } else if (alpha[qn] != want) {
          return false;
        }
      }
    }
    return true;
  };

  // Equivalence of transitive constituents is an equivalence relation, so a
  // greedy orbit-by-orbit matching is exact: no backtracking across orbits.
  for (const auto& orbit : orbits_b) {
    const Point base = orbit.front();
    bool placed = false;
    for (Point c = 0; c < degree && !placed; ++c) {
      if (used[c] || orbit_size_a[c] != orbit.size()) continue;
      std::vector<Point> assigned;
      if (try_assign(base, c, assigned)) {
        placed = true;
      } else {
        for (Point q : assigned) {
          used[alpha[q]] = false;
          alpha[q] = unset;
        }
      }
    }
    if (!placed) return std::nullopt;
  }
  return Permutation(std::move(alpha));
}

}  // namespace orbifold
