#include "orbifold/transform.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "orbifold/cycle_index.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/kernels.hpp"

namespace orbifold {

namespace {

std::string handle_label(const TransitiveAction& t) {
  std::string s = "deg" + std::to_string(t.degree()) + "[";
  for (std::size_t g = 0; g < t.action.images().size(); ++g) {
    if (g) s += ",";
    s += t.action.images()[g].to_string();
  }
  return s + "]";
}

}  // namespace

TransformResult transform_at_G(std::shared_ptr<const Presentation> g, const ClassFunction& z,
                               const PermGroup& omega, const TransformOptions& opts) {
  const auto tuples = enumerate_hom_tuples(*g, omega, opts.bounds);
  const auto& elems = omega.elements();
  struct Term {
    RingElem value;
    OrbitSummary summary;
  };
  auto terms = kernels::map_indexed<Term>(tuples.size(), [&](std::size_t i) {
    std::vector<Permutation> images;
    for (auto k : tuples[i]) images.push_back(elems[k]);
    const Homomorphism phi(g, omega.degree(), std::move(images));
    Term t{RingElem(1), {}};
    for (const auto& orbit : phi.orbits()) {
      const TransitiveAction handle = orbit_stabilizer_action(phi, orbit);
      t.value *= z.value(handle);
      if (opts.audit) {
        t.summary.orbit_sizes.push_back(orbit.size());
        t.summary.handles.push_back(handle_label(handle));
      }
    }
    return t;
  });
  TransformResult out{RingElem{}, tuples.size(), {}};
  for (auto& t : terms) {
    out.value += t.value;
    if (opts.audit) out.audit.push_back(std::move(t.summary));
  }
  out.value /= Rational(omega.order());
  return out;
}

RingElem transform_Z(const ClassFunction& z, const PermGroup& omega, const BigInt& n,
                     const TransformOptions& opts) {
  if (z.domain() != Domain::Z) throw std::invalid_argument("transform_Z needs a Z class function");
  if (n < 1) throw std::invalid_argument("transform_Z: index must be positive");
  const auto& elems = omega.elements();

  // Route 1: Σ_x Π_{ξ ∈ O(x)} Z(n|ξ|), identical orbit-length profiles grouped.
  const auto profiles = kernels::histogram<std::vector<std::size_t>>(elems.size(), [&](std::size_t i) {
    std::vector<std::size_t> lengths;
    const std::span<const Permutation> one(&elems[i], 1);
    for (const auto& o : orbits(one, omega.degree())) lengths.push_back(o.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  });
  RingElem direct;
  for (const auto& [lengths, count] : profiles) {
    RingElem term(static_cast<long long>(count));
    for (std::size_t len : lengths) term *= z.value(n * len);
    direct += term;
  }
  direct /= Rational(omega.order());

  // Route 2: P_Ω(z_n, z_2n, …, z_dn).
  const Poly ci = cycle_indicator(omega).polynomial;
  RingElem via_index;
  for (const auto& [mono, coeff] : ci.terms()) {
    RingElem term(coeff);
    for (const auto& [var, e] : mono) term *= z.value(n * var.index[0]).pow(e);
    via_index += term;
  }

  if (!approx_equal(direct, via_index, opts.rel_tol))
    throw ConsistencyError("transform_Z: element sum " + direct.to_string() +
                           " differs from cycle-indicator value " + via_index.to_string());
  return direct;
}

namespace {

using Signature = std::vector<HnfMatrix>;

Signature pair_signature(const Permutation& x, const Permutation& y) {
  const Permutation xy[2] = {x, y};
  Signature sig;
  for (const auto& orbit : orbits(xy, x.degree())) sig.push_back(orbit_hnf(x, y, orbit));
  std::sort(sig.begin(), sig.end());
  return sig;
}

RingElem sum_signatures(const ClassFunction& z, const PermGroup& omega, const HnfMatrix& h,
                        const std::map<Signature, std::uint64_t>& hist) {
  RingElem total;
  for (const auto& [sig, count] : hist) {
    RingElem term(static_cast<long long>(count));
    for (const auto& hx : sig) term *= z.value(hnf_compose(hx, h));
    total += term;
  }
  return total / Rational(omega.order());
}

}  // namespace

RingElem transform_ZZ(const ClassFunction& z, const PermGroup& omega, const HnfMatrix& h,
                      const TransformOptions& opts) {
  if (z.domain() != Domain::ZxZ) throw std::invalid_argument("transform_ZZ needs a ZxZ class function");
  if (static_cast<long double>(omega.order()) * omega.order() >
      static_cast<long double>(opts.bounds.max_word_evals))
    throw BoundExceeded("commuting-pair scan exceeds the work bound");
  const auto& elems = omega.elements();
  const auto pairs = kernels::commuting_pairs(elems);
  const auto hist = kernels::histogram<Signature>(pairs.size(), [&](std::size_t i) {
    return pair_signature(elems[pairs[i].first], elems[pairs[i].second]);
  });
  return sum_signatures(z, omega, h, hist);
}

RingElem transform_ZZ_serial(const ClassFunction& z, const PermGroup& omega, const HnfMatrix& h,
                             const TransformOptions&) {
  if (z.domain() != Domain::ZxZ) throw std::invalid_argument("transform_ZZ needs a ZxZ class function");
  const auto& elems = omega.elements();
  const auto pairs = kernels::commuting_pairs_serial(elems);
  const auto hist = kernels::histogram_serial<Signature>(pairs.size(), [&](std::size_t i) {
    return pair_signature(elems[pairs[i].first], elems[pairs[i].second]);
  });
  return sum_signatures(z, omega, h, hist);
}

ClassFunction transformed(const ClassFunction& z, std::shared_ptr<const PermGroup> omega,
                          const TransformOptions& opts) {
  const std::string desc = "(" + z.description() + " wr " + omega->name() + ")";
  switch (z.domain()) {
    case Domain::Z:
      return ClassFunction::sequence(
                 [z, omega, opts](const BigInt& n) { return transform_Z(z, *omega, n, opts); }, desc)
          .memoized();
    case Domain::ZxZ:
      return ClassFunction::lattice(
                 [z, omega, opts](const HnfMatrix& h) { return transform_ZZ(z, *omega, h, opts); },
                 desc)
          .memoized();
    case Domain::General: break;
  }
  throw std::invalid_argument("transformed: only Z and ZxZ class functions are closed-form");
}

TransitivityReport transitivity_check(const ClassFunction& z, const PermGroup& omega1,
                                      const PermGroup& omega2, const TransformOptions& opts) {
  const auto inner = transformed(z, std::make_shared<const PermGroup>(omega1), opts);
  const PermGroup wreath = wreath_product(omega1, omega2, opts.bounds);
  TransitivityReport r;
  r.domain = z.domain();
  if (z.domain() == Domain::Z) {
    r.lhs = transform_Z(inner, omega2, 1, opts);
    r.rhs = transform_Z(z, wreath, 1, opts);
  } else if (z.domain() == Domain::ZxZ) {
    r.lhs = transform_ZZ(inner, omega2, HnfMatrix::identity(), opts);
    r.rhs = transform_ZZ(z, wreath, HnfMatrix::identity(), opts);
  } else {
    throw std::invalid_argument("transitivity_check: domain must be Z or ZxZ");
  }
  r.equal = approx_equal(r.lhs, r.rhs, opts.rel_tol);
  return r;
}

HomCountReport wreath_hom_count_check(const Presentation& g, const PermGroup& omega1,
                                      const PermGroup& omega2, const Bounds& bounds) {
  const BigInt base_order = omega1.order();
  // #Hom(G_η, Ω1) for an index-k subgroup G_η of G.
  std::function<BigInt(std::size_t)> stabilizer_homs;
  switch (g.kind()) {
    case PresentationKind::Trivial:
      stabilizer_homs = [](std::size_t) { return BigInt(1); };
      break;
    case PresentationKind::Free: {
      const unsigned rank = g.kind_parameter();
      stabilizer_homs = [rank, base_order](std::size_t k) {
        // Schreier index formula: rank 1 + k(rank - 1).
        return boost::multiprecision::pow(base_order, static_cast<unsigned>(1 + k * (rank - 1)));
      };
      break;
    }
    case PresentationKind::FreeAbelian2: {
      const BigInt pairs = commuting_pairs(omega1).size();
      stabilizer_homs = [pairs](std::size_t) { return pairs; };
      break;
    }
    default:
      throw std::invalid_argument("wreath_hom_count_check: no closed form for subgroups of " +
                                  g.name());
  }

  const PermGroup wreath = wreath_product(omega1, omega2, bounds);
  HomCountReport r;
  r.direct = count_homs(g, wreath, bounds);

  const auto& top = omega2.elements();
  for (const auto& t : enumerate_hom_tuples(g, omega2, bounds)) {
    std::vector<Permutation> images;
    for (auto i : t) images.push_back(top[i]);
    BigInt term = 1;
    for (const auto& eta : orbits(images, omega2.degree())) {
      // |Ω1|^{|η|-1} free choices of φ_η, one Φ_η per homomorphism G_η → Ω1.
      term *= boost::multiprecision::pow(base_order, static_cast<unsigned>(eta.size() - 1));
      term *= stabilizer_homs(eta.size());
    }
    r.factored += term;
  }
  return r;
}

namespace {

// λ-part at y and ω-part of a wreath element on X×Y; nullopt if not of the form λ≀ω.
struct WreathParts {
  std::vector<Permutation> lambda;
  Permutation omega;
};

std::optional<WreathParts> split_wreath(const Permutation& p, std::size_t d1) {
  const std::size_t d2 = p.degree() / d1;
  WreathParts out;
  std::vector<Point> top(d2);
  for (Point y = 0; y < d2; ++y) {
    std::vector<Point> base(d1);
    top[y] = p(static_cast<Point>(y * d1)) / static_cast<Point>(d1);
    for (Point x = 0; x < d1; ++x) {
      const Point img = p(static_cast<Point>(x + y * d1));
      if (img / d1 != top[y]) return std::nullopt;
      base[x] = img % static_cast<Point>(d1);
    }
    out.lambda.emplace_back(std::move(base));
  }
  out.omega = Permutation(std::move(top));
  return out;
}

}  // namespace

OrbitStructureVerdict orbit_structure_check(std::span<const Permutation> images,
                                            std::size_t degree, std::size_t base_degree) {
  OrbitStructureVerdict v;
  auto fail = [&](std::string why) {
    v.pass = false;
    v.detail = std::move(why);
    return v;
  };
  const std::size_t d1 = base_degree;
  if (d1 == 0) throw std::invalid_argument("orbit_structure_check: base degree 0");
  for (const auto& p : images)
    if (p.degree() != degree) throw std::invalid_argument("orbit_structure_check: degree mismatch");
  if (degree % d1 != 0) throw std::invalid_argument("orbit_structure_check: degree not divisible");
  const std::size_t d2 = degree / d1;

  std::vector<WreathParts> parts;
  for (const auto& p : images) {
    auto s = split_wreath(p, d1);
    if (!s) return fail("image " + p.to_string() + " is not a wreath element");
    parts.push_back(std::move(*s));
  }
  std::vector<Permutation> top_images;
  for (const auto& s : parts) top_images.push_back(s.omega);
  const auto top_orbits = orbits(top_images, d2);

  std::vector<Orbit> predicted;
  for (const auto& eta : top_orbits) {
    const Point star = eta.front();
    // γ_y as φ(γ_y) via a breadth-first Schreier tree from η*.
    std::map<Point, Permutation> gamma{{star, Permutation(degree)}};
    std::vector<Point> queue{star};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point y = queue[head];
      for (std::size_t g = 0; g < images.size(); ++g) {
        const Point gy = parts[g].omega(y);
        if (!gamma.count(gy)) {
          gamma.emplace(gy, compose(images[g], gamma.at(y)));
          queue.push_back(gy);
        }
      }
    }
    auto lambda_at = [&](const Permutation& p, Point y) { return split_wreath(p, d1)->lambda[y]; };
    std::map<Point, Permutation> phi;  // φ_η(y) = λ(γ_y, η*)
    for (const auto& [y, t] : gamma) phi.emplace(y, lambda_at(t, star));
    if (!phi.at(star).is_identity()) return fail("φ_η(η*) differs from Φ_η(γ_η*)");

    std::vector<Permutation> big_phi;  // Φ_η on Schreier generators γ_{gy}⁻¹ g γ_y
    for (Point y : eta)
      for (std::size_t g = 0; g < images.size(); ++g) {
        const Point gy = parts[g].omega(y);
        const Permutation s = compose(gamma.at(gy).inverse(), compose(images[g], gamma.at(y)));
        if (s(static_cast<Point>(star * d1)) / d1 != star)
          return fail("Schreier generator leaves the block of η*");
        const Permutation value = lambda_at(s, star);
        // λ(g, y) = φ_η(gy) Φ_η(γ_{gy}⁻¹ g γ_y) φ_η(y)⁻¹
        if (compose(phi.at(gy), compose(value, phi.at(y).inverse())) != parts[g].lambda[y])
          return fail("crossed homomorphism not reconstructed from (Φ_η, φ_η)");
        big_phi.push_back(value);
      }
    for (const auto& xi : orbits(big_phi, d1)) {
      Orbit o;
      for (Point y : eta)
        for (Point x : xi) o.push_back(phi.at(y)(x) + y * static_cast<Point>(d1));
      std::sort(o.begin(), o.end());
      predicted.push_back(std::move(o));
    }
  }
  std::sort(predicted.begin(), predicted.end());

  auto actual = orbits(images, degree);
  for (const auto& o : actual) {
    std::vector<Point> proj;
    for (Point p : o) proj.push_back(p / static_cast<Point>(d1));
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    auto eta = std::find_if(top_orbits.begin(), top_orbits.end(),
                            [&](const Orbit& e) { return e == proj; });
    if (eta == top_orbits.end()) return fail("orbit does not project onto a single top orbit");
    if (o.size() % eta->size() != 0) return fail("orbit size not a multiple of |η|");
  }
  std::sort(actual.begin(), actual.end());
  if (actual != predicted) return fail("orbits differ from the <ξ, η> prediction");
  return v;
}

OrbitStructureVerdict orbit_structure_check(const Homomorphism& phi, std::size_t base_degree) {
  return orbit_structure_check(phi.images(), phi.degree(), base_degree);
}

}  // namespace orbifold
