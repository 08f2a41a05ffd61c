#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/perm_group.hpp"

using namespace orbifold;

TEST_CASE("composition applies the right factor first") {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{1, 2}});
  const auto pq = p * q;
  CHECK(pq(1) == p(q(1)));
  CHECK(pq.to_string() == "(0 1 2)");
  CHECK((q * p).to_string() == "(0 2 1)");
  CHECK_THROWS_AS(p * Permutation(4), std::invalid_argument);
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  const auto c = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(c.cycle_type() == std::vector<std::size_t>{2, 3});
  CHECK(c.pow(6).is_identity());
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(Permutation(3).to_string() == "()");
}

TEST_CASE("group orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(cyclic_group(6).order() == 6);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(trivial_group(3).order() == 1);
  CHECK(builtin_group("trivial:3").degree() == 3);
  CHECK_THROWS_AS(builtin_group("Q8"), std::invalid_argument);
  Bounds tight;
  tight.max_elements = 100;
  CHECK_THROWS_AS(symmetric_group(5, tight), BoundExceeded);
}

TEST_CASE("closure of random generators matches orbit oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<Permutation> gens{oracle::random_perm(rng, n), oracle::random_perm(rng, n)};
    const auto got = orbits(gens, n);
    const auto want = oracle::orbits(gens, n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    const auto g = PermGroup::closure(gens, n);
    for (const auto& x : g.elements())
      for (const auto& y : gens) CHECK(g.contains(x * y));
  }
}

TEST_CASE("commuting pairs count |Omega| times class number") {
  for (const char* name : {"S3", "S4", "A4", "D4", "D5", "C5"}) {
    const auto g = builtin_group(name);
    CHECK(commuting_pairs(g).size() == g.order() * oracle::class_count(g.elements()));
  }
}

TEST_CASE("centralizer in the symmetric group") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Permutation> gens{oracle::random_perm(rng, n)};
    if (trial % 2) gens.push_back(oracle::random_perm(rng, n));
    CHECK(centralizer_in_sym(gens, n).order() == oracle::centralizer_order(gens, n));
  }
}

TEST_CASE("wreath product order and action") {
  const auto w = wreath_product(builtin_group("S2"), builtin_group("S3"));
  CHECK(w.degree() == 6);
  CHECK(w.order() == 8 * 6);
  const auto c3 = builtin_group("C3");
  const auto w2 = wreath_product(c3, builtin_group("S2"));
  CHECK(w2.order() == 9 * 2);
  // (x, y) ↦ (λ(y)x, ωy) with point x + y·d1.
  const std::vector<Permutation> lambda{Permutation::from_cycles(3, {{0, 1, 2}}), Permutation(3)};
  const auto swap = Permutation::from_cycles(2, {{0, 1}});
  const auto e = wreath_element(lambda, swap);
  CHECK(e(0 + 0 * 3) == 1 + 1 * 3);
  CHECK(e(2 + 1 * 3) == 2 + 0 * 3);
  CHECK(w2.contains(e));
}

TEST_CASE("conjugating permutation recovers random conjugates") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Permutation> a{oracle::random_perm(rng, n), oracle::random_perm(rng, n)};
    const auto alpha = oracle::random_perm(rng, n);
    std::vector<Permutation> b;
    for (const auto& p : a) b.push_back(alpha.inverse() * p * alpha);
    const auto found = conjugating_permutation(a, b, n);
    REQUIRE(found.has_value());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(found->inverse() * a[i] * *found == b[i]);
  }
  const std::vector<Permutation> x{Permutation::from_cycles(3, {{0, 1}})};
  const std::vector<Permutation> y{Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK_FALSE(conjugating_permutation(x, y, 3).has_value());
}
