#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/transform.hpp"

using namespace orbifold;

namespace {

Poly z(int n) { return Poly(Variable::z(n)); }
Poly zh(long m, long k, long l) { return Poly(Variable::z(HnfMatrix(m, k, l))); }

std::shared_ptr<const Presentation> pres(const char* name) {
  return std::make_shared<const Presentation>(Presentation::builtin(name));
}

// (1/|Ω|) Σ_x Π_{cycles} z_{n·len}.
Poly z_oracle(const PermGroup& omega, long n) {
  Poly total;
  for (const auto& x : omega.elements()) {
    Poly term(1);
    for (const auto& orbit : oracle::orbits({x}, omega.degree()))
      term *= z(static_cast<int>(n * static_cast<long>(orbit.size())));
    total += term;
  }
  return total * Poly(Rational(1, static_cast<long long>(omega.order())));
}

// (1/|Ω|) Σ_{xy=yx} Π_ξ z(stabilizer lattice), scanned by brute force.
Poly zz_oracle(const PermGroup& omega) {
  Poly total;
  for (const auto& x : omega.elements())
    for (const auto& y : omega.elements()) {
      if (x * y != y * x) continue;
      Poly term(1);
      for (const auto& orbit : oracle::orbits({x, y}, omega.degree()))
        term *= Poly(Variable::z(oracle::stabilizer_hnf(x, y, orbit[0])));
      total += term;
    }
  return total * Poly(Rational(1, static_cast<long long>(omega.order())));
}

}  // namespace

TEST_CASE("transform over Z") {
  const auto zf = ClassFunction::symbolic_sequence();
  const auto s2 = builtin_group("S2");
  CHECK(transform_Z(zf, s2, 1) == RingElem((z(1).pow(2) + z(2)) * Poly(Rational(1, 2))));
  for (const char* name : {"S3", "C4", "A4", "D4"}) {
    const auto g = builtin_group(name);
    for (long n : {1L, 2L, 3L}) CHECK(transform_Z(zf, g, n) == RingElem(z_oracle(g, n)));
    CHECK(transform_at_G(pres("Z"), zf, g).value == transform_Z(zf, g, 1));
  }
}

TEST_CASE("transform over ZxZ") {
  const auto zf = ClassFunction::symbolic_lattice();
  const Poly half = (zh(1, 0, 1).pow(2) + zh(1, 0, 2) + zh(2, 0, 1) + zh(1, 1, 2)) * Poly(Rational(1, 2));
  CHECK(transform_ZZ(zf, builtin_group("S2"), HnfMatrix::identity()) == RingElem(half));
  for (const char* name : {"S3", "C3", "D4", "A4"}) {
    const auto g = builtin_group(name);
    const auto v = transform_ZZ(zf, g, HnfMatrix::identity());
    CHECK(v == RingElem(zz_oracle(g)));
    CHECK(v == transform_ZZ_serial(zf, g, HnfMatrix::identity()));
    CHECK(transform_at_G(pres("ZxZ"), zf, g).value == v);
  }
  // Off the identity the values are the composed lattices.
  const auto g = builtin_group("S2");
  const HnfMatrix h(1, 1, 2);
  const Poly want = (zh(1, 1, 2).pow(2) + Poly(Variable::z(hnf_compose(HnfMatrix(1, 0, 2), h))) +
                     Poly(Variable::z(hnf_compose(HnfMatrix(2, 0, 1), h))) +
                     Poly(Variable::z(hnf_compose(HnfMatrix(1, 1, 2), h)))) *
                    Poly(Rational(1, 2));
  CHECK(transform_ZZ(zf, g, h) == RingElem(want));
}

TEST_CASE("transform over a general group") {
  const auto trivial = pres("trivial");
  auto table = std::make_shared<ActionTable>();
  table->add("c", orbit_stabilizer_action(Homomorphism(trivial, 1, {}), Orbit{0}, 0), Variable::named("c"));
  const auto cf = ClassFunction::table(table);
  const auto r = transform_at_G(trivial, cf, builtin_group("S3"));
  CHECK(r.value == RingElem(Poly(Variable::named("c")).pow(3) * Poly(Rational(1, 6))));
  CHECK(r.hom_count == 1);

  // F2 into S2 with a table covering both transitive classes of degree ≤ 2.
  const auto f2 = pres("F2");
  auto t2 = std::make_shared<ActionTable>();
  t2->add("pt", orbit_stabilizer_action(Homomorphism(f2, 1, {Permutation(1), Permutation(1)}), Orbit{0}),
          Variable::named("u"));
  const auto sw = Permutation::from_cycles(2, {{0, 1}});
  t2->add("ab", orbit_stabilizer_action(Homomorphism(f2, 2, {sw, sw}), Orbit{0, 1}), Variable::named("v"));
  t2->add("a", orbit_stabilizer_action(Homomorphism(f2, 2, {sw, Permutation(2)}), Orbit{0, 1}), Variable::named("w"));
  t2->add("b", orbit_stabilizer_action(Homomorphism(f2, 2, {Permutation(2), sw}), Orbit{0, 1}), Variable::named("x"));
  TransformOptions opts;
  opts.audit = true;
  const auto res = transform_at_G(f2, ClassFunction::table(t2), builtin_group("S2"), opts);
  const Poly u(Variable::named("u")), v(Variable::named("v")), w(Variable::named("w")), x(Variable::named("x"));
  CHECK(res.value == RingElem((u.pow(2) + v + w + x) * Poly(Rational(1, 2))));
  CHECK(res.hom_count == 4);
  CHECK(res.audit.size() == 4);
  // A class missing from the table is an error, not a default.
  auto partial = std::make_shared<ActionTable>();
  partial->add("pt", orbit_stabilizer_action(Homomorphism(f2, 1, {Permutation(1), Permutation(1)}), Orbit{0}), 1);
  CHECK_THROWS_AS(transform_at_G(f2, ClassFunction::table(partial), builtin_group("S2")), UnregisteredClass);
}

TEST_CASE("transitivity on extra pairs") {
  const auto zf = ClassFunction::symbolic_sequence();
  const auto zz = ClassFunction::symbolic_lattice();
  for (const auto& [a, b] : {std::pair{"C4", "S2"}, std::pair{"S2", "C4"}, std::pair{"A4", "S2"}, std::pair{"D4", "C2"}}) {
    CHECK(transitivity_check(zf, builtin_group(a), builtin_group(b)).equal);
    CHECK(transitivity_check(zz, builtin_group(a), builtin_group(b)).equal);
  }
}

TEST_CASE("wreath hom counts and orbit structure") {
  const auto s2 = builtin_group("S2");
  const auto s3 = builtin_group("S3");
  for (const char* name : {"trivial", "Z", "ZxZ", "F2", "F3"}) {
    const auto p = Presentation::builtin(name);
    if (std::string(name) == "F3") {
      CHECK(wreath_hom_count_check(p, s2, s2).equal());
      continue;
    }
    CHECK(wreath_hom_count_check(p, s2, s3).equal());
    CHECK(wreath_hom_count_check(p, s3, s2).equal());
  }
  CHECK(wreath_hom_count_check(Presentation::builtin("F2"), s2, s2).direct == 64);
  CHECK_THROWS_AS(wreath_hom_count_check(Presentation::builtin("C3"), s2, s2), std::invalid_argument);

  const auto w = wreath_product(s2, s3);
  const auto p = Presentation::builtin("F2");
  CHECK(count_hom_failures(p, w, [&](std::span<const Permutation> im) {
          return orbit_structure_check(im, w.degree(), 2).pass;
        }) == 0);
  // A permutation mixing fibres is not a wreath element.
  const std::vector<Permutation> bad{Permutation::from_cycles(6, {{0, 1, 2}}), Permutation(6)};
  CHECK_FALSE(orbit_structure_check(bad, 6, 2).pass);
}
