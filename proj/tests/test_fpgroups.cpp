#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/fpgroup.hpp"

using namespace orbifold;

namespace {
std::shared_ptr<const Presentation> pres(const char* name) {
  return std::make_shared<const Presentation>(Presentation::builtin(name));
}
}  // namespace

TEST_CASE("words parse with inverses and powers") {
  const auto p = Presentation::builtin("ZxZ");
  CHECK(p.generator_count() == 2);
  const auto w = parse_word("a^3B", p.generator_names());
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[3].generator == 1);
  CHECK(w.letters[3].exponent == -1);
  CHECK_THROWS_AS(parse_word("ac", p.generator_names()), ParseError);
  CHECK_THROWS_AS(Presentation::builtin("C13"), std::invalid_argument);
}

TEST_CASE("word evaluation follows letter order") {
  const std::vector<Permutation> im{Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})};
  const auto p = Presentation::builtin("F2");
  CHECK(word_evaluate(parse_word("ab", p.generator_names()), im) == im[0] * im[1]);
  CHECK(word_evaluate(parse_word("aA", p.generator_names()), im).is_identity());
}

TEST_CASE("homomorphism counts") {
  const auto s3 = builtin_group("S3");
  const auto s4 = builtin_group("S4");
  CHECK(count_homs(Presentation::builtin("trivial"), s4) == 1);
  CHECK(count_homs(Presentation::builtin("Z"), s4) == 24);
  CHECK(count_homs(Presentation::builtin("F2"), s3) == 36);
  CHECK(count_homs(Presentation::builtin("ZxZ"), s4) == 24 * oracle::class_count(s4.elements()));
  for (unsigned m = 2; m <= 6; ++m) {
    std::uint64_t want = 0;
    for (const auto& x : s4.elements()) want += x.pow(m).is_identity();
    CHECK(count_homs(Presentation::builtin("C" + std::to_string(m)), s4) == want);
  }
  const auto custom = Presentation::parse("S3pres", {"a", "b"}, {"a^2", "b^3", "abab"});
  CHECK(count_homs(custom, s3) == 1 + 3 + 6);  // kernels S3, A3, 1
  Bounds tight;
  tight.max_word_evals = 10;
  CHECK_THROWS_AS(count_homs(Presentation::builtin("F2"), s3, tight), BoundExceeded);
}

TEST_CASE("homomorphism validation") {
  const auto s3 = std::make_shared<const PermGroup>(builtin_group("S3"));
  CHECK_THROWS_AS(Homomorphism(pres("ZxZ"), s3,
                               {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})}),
                  std::invalid_argument);
  const auto c3 = std::make_shared<const PermGroup>(builtin_group("C3"));
  CHECK_THROWS_AS(Homomorphism(pres("Z"), c3, {Permutation::from_cycles(3, {{0, 1}})}), std::invalid_argument);
}

TEST_CASE("orbit stabilizer actions relabel increasingly") {
  const Homomorphism phi(pres("Z"), 5, {Permutation::from_cycles(5, {{1, 3}, {0, 2, 4}})});
  const auto orbs = phi.orbits();
  REQUIRE(orbs.size() == 2);
  const auto t = orbit_stabilizer_action(phi, orbs[1]);
  CHECK(t.degree() == 2);
  CHECK(t.relabel == std::vector<Point>{1, 3});
  CHECK(t.action.images()[0].to_string() == "(0 1)");
  const auto t2 = orbit_stabilizer_action(phi, orbs[0], 4);
  CHECK(t2.basepoint == 2);
  CHECK_THROWS_AS(orbit_stabilizer_action(phi, Orbit{0, 1}), std::invalid_argument);
}

TEST_CASE("action equivalence and decomposition") {
  const auto f2 = pres("F2");
  const Homomorphism a(f2, 4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
  // Same cycle types and orbit sizes, but the images commute only in the first.
  const Homomorphism p(f2, 4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  const Homomorphism q(f2, 4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  const Homomorphism c(f2, 4, {Permutation::from_cycles(4, {{1, 3}}), Permutation::from_cycles(4, {{0, 2}})});
  CHECK_FALSE(actions_equivalent(p, q).has_value());
  const auto alpha = actions_equivalent(a, c);
  REQUIRE(alpha.has_value());
  for (std::size_t g = 0; g < 2; ++g) CHECK(alpha->inverse() * a.images()[g] * *alpha == c.images()[g]);

  const Homomorphism d(pres("Z"), 6, {Permutation::from_cycles(6, {{0, 1}, {2, 3}})});
  const auto dec = decompose_transitives(d);
  REQUIRE(dec.constituents.size() == 2);
  CHECK(dec.constituents[0].action.degree() == 2);
  CHECK(dec.constituents[0].multiplicity == 2);
  CHECK(dec.constituents[1].action.degree() == 1);
  CHECK(dec.constituents[1].multiplicity == 2);
}

TEST_CASE("random conjugate actions are equivalent") {
  std::mt19937_64 rng(5);
  const auto f2 = pres("F2");
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::vector<Permutation> im{oracle::random_perm(rng, n), oracle::random_perm(rng, n)};
    const auto alpha = oracle::random_perm(rng, n);
    std::vector<Permutation> conj;
    for (const auto& p : im) conj.push_back(alpha.inverse() * p * alpha);
    CHECK(actions_equivalent(Homomorphism(f2, n, im), Homomorphism(f2, n, conj)).has_value());
  }
}
