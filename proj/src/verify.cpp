#include "orbifold/verify.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "orbifold/counting.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/modular.hpp"
#include "orbifold/symprod.hpp"

namespace orbifold {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"transitivity", "expoid",      "symprod",  "counting",
                                              "lemmas",       "modular",     "trivial-law", "basepoint"};
  return names;
}

namespace {

using PresPtr = std::shared_ptr<const Presentation>;

PresPtr builtin(const std::string& name) {
  return std::make_shared<const Presentation>(Presentation::builtin(name));
}

std::vector<PermGroup> pair_groups(const Bounds& b) {
  std::vector<PermGroup> out;
  for (const char* name : {"trivial", "C2", "C3", "S2", "S3"}) out.push_back(builtin_group(name, b));
  return out;
}

struct GroupPair {
  const PermGroup* base;
  const PermGroup* top;
  std::string label;
};

std::vector<GroupPair> pair_set(const std::vector<PermGroup>& groups, std::uint64_t limit) {
  std::vector<GroupPair> out;
  for (const auto& a : groups)
    for (const auto& b : groups) {
      BigInt order = boost::multiprecision::pow(BigInt(a.order()), static_cast<unsigned>(b.degree()));
      order *= b.order();
      if (order <= limit) out.push_back({&a, &b, "(" + a.name() + "," + b.name() + ")"});
    }
  return out;
}

std::string mismatch(const RingElem& a, const RingElem& b) {
  return a.to_string() + " vs " + b.to_string();
}

SuiteReport transitivity(const VerifyConfig& cfg) {
  SuiteReport r{"transitivity", {}};
  TransformOptions opts{cfg.bounds, cfg.rel_tol, false};
  const auto groups = pair_groups(cfg.bounds);
  for (const auto& [domain, z] : {std::pair{std::string("Z"), ClassFunction::symbolic_sequence()},
                                  std::pair{std::string("ZxZ"), ClassFunction::symbolic_lattice()}}) {
    for (const auto& p : pair_set(groups, cfg.wreath_limit)) {
      const auto rep = transitivity_check(z, *p.base, *p.top, opts);
      r.checks.push_back({domain + " " + p.label, rep.equal, rep.equal ? "" : mismatch(rep.lhs, rep.rhs)});
    }
  }
  const auto s2 = builtin_group("S2");
  const auto rep = transitivity_check(ClassFunction::symbolic_sequence(), s2, s2, opts);
  const Poly z1(Variable::z(1)), z2(Variable::z(2)), z4(Variable::z(4));
  const Poly expected = (z1.pow(4) + Poly(2) * z1.pow(2) * z2 + Poly(3) * z2.pow(2) + Poly(2) * z4) *
                        Poly(Rational(1, 8));
  const bool ok = rep.lhs == RingElem(expected) && rep.rhs == RingElem(expected);
  r.checks.push_back({"Z (S2,S2) spot value", ok, ok ? "" : mismatch(rep.lhs, expected)});
  return r;
}

SuiteReport expoid(const VerifyConfig& cfg) {
  SuiteReport r{"expoid", {}};
  TransformOptions opts{cfg.bounds, cfg.rel_tol, false};
  for (const auto& [label, z, order] :
       {std::tuple{std::string("Z"), ClassFunction::symbolic_sequence(), cfg.expoid_order_z},
        std::tuple{std::string("ZxZ"), ClassFunction::symbolic_lattice(), cfg.expoid_order_zz}}) {
    const auto rep = expoid_verify(z, order, opts);
    for (unsigned n = 0; n <= order; ++n) {
      const bool ok = rep.lhs[n] == rep.rhs[n];
      r.checks.push_back({label + " p^" + std::to_string(n), ok, ok ? "" : mismatch(rep.lhs[n], rep.rhs[n])});
    }
  }
  return r;
}

SuiteReport symprod(const VerifyConfig& cfg) {
  SuiteReport r{"symprod", {}};
  TransformOptions opts{cfg.bounds, cfg.rel_tol, false};
  for (const auto& [label, z] : {std::pair{std::string("Z"), ClassFunction::symbolic_sequence()},
                                 std::pair{std::string("ZxZ"), ClassFunction::symbolic_lattice()}}) {
    for (unsigned n = 1; n <= cfg.symprod_max; ++n) {
      CheckResult c{label + " Z_" + std::to_string(n), true, ""};
      try {
        symmetric_product(z, n, opts);
      } catch (const ConsistencyError& e) {
        c.pass = false;
        c.detail = e.what();
      }
      r.checks.push_back(std::move(c));
    }
  }
  const auto schur = schur_polynomials(cfg.schur_max);
  for (unsigned n = 1; n <= cfg.schur_max; ++n) {
    const auto ci = cycle_indicator(symmetric_group(n, cfg.bounds)).polynomial;
    const bool ok = schur[n - 1] == ci;
    r.checks.push_back({"P_" + std::to_string(n) + " = cycle index of S" + std::to_string(n), ok,
                        ok ? "" : schur[n - 1].to_string() + " vs " + ci.to_string()});
  }
  return r;
}

SuiteReport counting(const VerifyConfig& cfg) {
  SuiteReport r{"counting", {}};
  for (const char* name : {"trivial", "Z", "ZxZ", "F2"}) {
    const auto pres = builtin(name);
    for (unsigned n = 1; n <= cfg.census_max; ++n) {
      const auto c = census(pres, n, cfg.bounds);
      std::uint64_t total = 0, bad = 0;
      for (const auto& cls : c.classes) {
        total += cls.observed_size;
        if (cls.predicted_size != cls.observed_size) ++bad;
      }
      const std::string label = std::string(name) + " n=" + std::to_string(n);
      r.checks.push_back({label + " class sizes", bad == 0 && total == c.hom_count,
                          std::to_string(c.classes.size()) + " classes, " + std::to_string(bad) +
                              " mismatched, " + std::to_string(total) + "/" + std::to_string(c.hom_count) +
                              " homs"});
      const auto sn = symmetric_group(n, cfg.bounds);
      const auto failures = count_hom_failures(
          *pres, sn,
          [&](std::span<const Permutation> images) {
            Homomorphism phi(pres, n, std::vector<Permutation>(images.begin(), images.end()));
            return centralizer_order_formula(phi, cfg.bounds) ==
                   BigInt(centralizer_in_sym(images, n, cfg.bounds).order());
          },
          cfg.bounds);
      r.checks.push_back({label + " centralizer orders", failures == 0,
                          std::to_string(failures) + " failures"});
    }
  }
  return r;
}

SuiteReport lemmas(const VerifyConfig& cfg) {
  SuiteReport r{"lemmas", {}};
  const auto groups = pair_groups(cfg.bounds);
  const auto pairs = pair_set(groups, cfg.wreath_limit);
  for (const auto& p : pairs) {
    const auto wreath = wreath_product(*p.base, *p.top, cfg.bounds);
    for (const char* name : {"trivial", "Z", "ZxZ", "F2"}) {
      const auto pres = builtin(name);
      const auto counts = wreath_hom_count_check(*pres, *p.base, *p.top, cfg.bounds);
      r.checks.push_back({std::string(name) + " " + p.label + " hom count", counts.equal(),
                          counts.direct.str() + " direct, " + counts.factored.str() + " factored"});
      const auto failures = count_hom_failures(
          *pres, wreath,
          [&](std::span<const Permutation> images) {
            return orbit_structure_check(images, wreath.degree(), p.base->degree()).pass;
          },
          cfg.bounds);
      r.checks.push_back({std::string(name) + " " + p.label + " orbit structure", failures == 0,
                          std::to_string(failures) + " failures"});
    }
  }
  return r;
}

// Deterministic uniform draw in [0, 1) from the raw engine output.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

std::string fmt_real(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

SuiteReport modular(const VerifyConfig& cfg) {
  SuiteReport r{"modular", {}};
  TransformOptions opts{cfg.bounds, cfg.rel_tol, false};
  const auto one = builtin_invariant("constant");
  for (const auto& [name, classes] : {std::pair{"S3", 3}, std::pair{"S4", 5}}) {
    const Complex v = torus_partition_function(builtin_group(name, cfg.bounds), one, Complex(0.1, 1.3), opts);
    const bool ok = std::abs(v - Complex(classes)) <= cfg.rel_tol * classes;
    r.checks.push_back({std::string("constant ") + name + " = " + std::to_string(classes), ok, fmt(v)});
  }

  const auto coeffs = klein_j_coefficients(cfg.q_order);
  const std::vector<BigInt> head{1, 744, 196884, 21493760};
  bool head_ok = coeffs.size() >= head.size() && std::equal(head.begin(), head.end(), coeffs.begin());
  r.checks.push_back({"j coefficients q^-1..q^2", head_ok, ""});

  const KleinJ j(cfg.q_order);
  const TorusInvariant f = j;
  const auto s2 = builtin_group("S2", cfg.bounds);
  std::mt19937_64 rng(cfg.seed);
  for (unsigned k = 0; k < cfg.samples; ++k) {
    const Complex tau(unit(rng) - 0.5, 1.0 + unit(rng));
    const Complex a = torus_partition_function(s2, f, tau, opts);
    const Complex b = torus_partition_function(s2, f, tau + 1.0, opts);
    const double rel = std::abs(b - a) / std::abs(a);
    r.checks.push_back({"S2 tau+1 at " + fmt(tau), rel < cfg.modular_tol, "relative change " + fmt_real(rel)});

    const Complex closed = 0.5 * (j(tau) * j(tau) + j(2.0 * tau) + j(tau / 2.0) + j((tau + 1.0) / 2.0));
    const double err = std::abs(closed - a) / std::abs(closed);
    r.checks.push_back({"S2 closed form at " + fmt(tau), err < 1e-12, "relative error " + fmt_real(err)});
  }
  // τ and −1/τ both have Im ≥ 1 only on the unit circle at τ = i.
  const Complex tau(0, 1);
  const Complex a = torus_partition_function(s2, f, tau, opts);
  const Complex b = torus_partition_function(s2, f, -1.0 / tau, opts);
  r.checks.push_back({"S2 -1/tau at i", std::abs(b - a) / std::abs(a) < cfg.modular_tol, fmt(a)});
  return r;
}

SuiteReport trivial_law(const VerifyConfig& cfg) {
  SuiteReport r{"trivial-law", {}};
  const auto pres = builtin("trivial");
  auto table = std::make_shared<ActionTable>();
  Homomorphism point(pres, 1, {});
  table->add("c", orbit_stabilizer_action(point, Orbit{0}, 0), Variable::named("c"));
  const auto z = ClassFunction::table(table);
  TransformOptions opts{cfg.bounds, cfg.rel_tol, false};
  for (const char* name : {"trivial", "trivial:3", "C2", "C5", "S2", "S3", "S4", "A4", "D4", "D5"}) {
    const auto omega = builtin_group(name, cfg.bounds);
    const auto got = transform_at_G(pres, z, omega, opts).value;
    const Poly expected = Poly(Variable::named("c")).pow(static_cast<unsigned>(omega.degree())) *
                          Poly(Rational(1, static_cast<long long>(omega.order())));
    const bool ok = got == RingElem(expected);
    r.checks.push_back({name, ok, got.to_string()});
  }
  return r;
}

// Every orbit of every homomorphism from the other suites, up to relabeling.
SuiteReport basepoint(const VerifyConfig& cfg) {
  SuiteReport r{"basepoint", {}};
  const auto groups = pair_groups(cfg.bounds);
  std::vector<std::pair<std::string, PermGroup>> targets;
  for (const auto& p : pair_set(groups, cfg.wreath_limit))
    targets.emplace_back("wr" + p.label, wreath_product(*p.base, *p.top, cfg.bounds));
  for (unsigned n = 1; n <= std::max(cfg.census_max, cfg.schur_max); ++n)
    targets.emplace_back("S" + std::to_string(n), symmetric_group(n, cfg.bounds));

  for (const char* name : {"trivial", "Z", "ZxZ", "F2"}) {
    const auto pres = builtin(name);
    const bool lattice = pres->kind() == PresentationKind::FreeAbelian2;
    std::set<std::vector<Point>> seen;
    std::uint64_t orbits_checked = 0, failures = 0;
    std::string first_failure;
    for (const auto& [label, target] : targets) {
      const auto& elems = target.elements();
      for (const auto& t : enumerate_hom_tuples(*pres, target, cfg.bounds)) {
        std::vector<Permutation> images;
        for (auto i : t) images.push_back(elems[i]);
        Homomorphism phi(pres, target.degree(), images);
        for (const auto& orbit : phi.orbits()) {
          const auto base = orbit_stabilizer_action(phi, orbit);
          std::vector<Point> key;
          for (const auto& p : base.action.images()) key.insert(key.end(), p.images().begin(), p.images().end());
          key.push_back(static_cast<Point>(base.degree()));
          if (!seen.insert(std::move(key)).second) continue;
          ++orbits_checked;
          ActionTable table;
          table.add("H", base, 0);
          const auto base_hnf = lattice ? orbit_hnf(images[0], images[1], orbit) : HnfMatrix{};
          for (Point b : orbit) {
            // Relabel so that b becomes point 0 of the handle.
            const auto moved = orbit_stabilizer_action(phi, orbit, b);
            const auto d = moved.degree();
            std::vector<Point> swap(d);
            for (std::size_t i = 0; i < d; ++i) swap[i] = static_cast<Point>(i);
            std::swap(swap[0], swap[moved.basepoint]);
            const Permutation s(swap);
            std::vector<Permutation> conj;
            for (const auto& p : moved.action.images()) conj.push_back(s * p * s);
            TransitiveAction rebased{Homomorphism(pres, d, conj), 0, {}};
            bool ok = true;
            try {
              table.lookup(rebased);
            } catch (const UnregisteredClass&) {
              ok = false;
            }
            if (lattice && !(orbit_hnf(images[0], images[1], orbit, b) == base_hnf)) ok = false;
            if (!ok) {
              ++failures;
              if (first_failure.empty()) first_failure = label + " basepoint " + std::to_string(b);
            }
          }
        }
      }
    }
    r.checks.push_back({name, failures == 0,
                        std::to_string(orbits_checked) + " distinct orbits, " + std::to_string(failures) +
                            " failures" + (first_failure.empty() ? "" : " (" + first_failure + ")")});
  }
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const VerifyConfig& config) {
  if (suite == "transitivity") return transitivity(config);
  if (suite == "expoid") return expoid(config);
  if (suite == "symprod") return symprod(config);
  if (suite == "counting") return counting(config);
  if (suite == "lemmas") return lemmas(config);
  if (suite == "modular") return modular(config);
  if (suite == "trivial-law") return trivial_law(config);
  if (suite == "basepoint") return basepoint(config);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace orbifold
