#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/lattice.hpp"

using namespace orbifold;

TEST_CASE("HNF validation and basics") {
  CHECK_THROWS_AS(HnfMatrix(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(HnfMatrix(0, 0, 1), std::invalid_argument);
  const HnfMatrix h(2, 1, 3);
  CHECK(h.index() == 6);
  CHECK(h.to_string() == "(2,1,3)");
  CHECK(h.contains({3, 0}));
  CHECK(h.contains({1, 2}));
  CHECK_FALSE(h.contains({1, 0}));
}

TEST_CASE("enumeration counts sigma(n) and matches a membership scan") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto all = hnf_enumerate(n);
    CHECK(all.size() == oracle::sigma1(n));
    for (const auto& h : all) CHECK(h.index() == n);
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  for (const auto& h : hnf_enumerate(6))
    for (long i = -7; i <= 7; ++i)
      for (long j = -7; j <= 7; ++j)
        CHECK(h.contains({i, j}) == oracle::in_span(h.first_basis(), h.second_basis(), i, j, 8));
}

TEST_CASE("canonicalization of random bases") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = [&] { return static_cast<long>(rng() % 9) - 4; };
    const LatticeVector v1{r(), r()}, v2{r(), r()};
    const BigInt det = v1.first * v2.second - v1.second * v2.first;
    if (det == 0) {
      CHECK_THROWS_AS(hnf_canonicalize(v1, v2), std::invalid_argument);
      continue;
    }
    const auto h = hnf_canonicalize(v1, v2);
    CHECK(h.index() == abs(det));
    for (long i = -5; i <= 5; ++i)
      for (long j = -5; j <= 5; ++j) CHECK(h.contains({i, j}) == oracle::in_span(v1, v2, i, j, 40));
  }
}

TEST_CASE("composition reads the inner lattice in the outer basis") {
  for (const auto& outer : hnf_enumerate(4))
    for (const auto& inner : hnf_enumerate(3)) {
      const auto c = hnf_compose(inner, outer);
      CHECK(c.index() == 12);
      const auto [l, z0] = outer.first_basis();
      const auto [k, m] = outer.second_basis();
      // v ∈ composed iff v = i·(λ,0) + j·(κ,μ) with (i, j) ∈ inner.
      for (long i = -4; i <= 4; ++i)
        for (long j = -4; j <= 4; ++j)
          if (inner.contains({i, j})) CHECK(c.contains({i * l + j * k, j * m}));
    }
  CHECK(hnf_compose(HnfMatrix::identity(), HnfMatrix(2, 1, 3)) == HnfMatrix(2, 1, 3));
  CHECK(hnf_compose(HnfMatrix(2, 1, 3), HnfMatrix::identity()) == HnfMatrix(2, 1, 3));
}

TEST_CASE("orbit HNF matches a brute-force stabilizer scan") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 60) {
    const std::size_t n = 1 + rng() % 6;
    const auto x = oracle::random_perm(rng, n);
    std::vector<Permutation> commuting;
    for (const auto& c : oracle::all_perms(n))
      if (c * x == x * c) commuting.push_back(c);
    const auto y = commuting[rng() % commuting.size()];
    for (const auto& orbit : oracle::orbits({x, y}, n))
      for (Point b : orbit) CHECK(orbit_hnf(x, y, orbit, b) == oracle::stabilizer_hnf(x, y, b));
    ++tested;
  }
  // Non-commuting inputs are rejected.
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  CHECK_THROWS_AS(orbit_hnf(a, b, Orbit{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("modular parameter of a sublattice") {
  const Complex tau(0, 2);
  const Complex t = tau_of(HnfMatrix(2, 0, 1), tau);
  CHECK(t.real() == doctest::Approx(0.0));
  CHECK(t.imag() == doctest::Approx(4.0));
  const Complex u = tau_of(HnfMatrix(1, 1, 2), tau);
  CHECK(u.real() == doctest::Approx(0.5));
  CHECK(u.imag() == doctest::Approx(1.0));
  CHECK_THROWS_AS(tau_of(HnfMatrix::identity(), Complex(0.3, -1)), std::invalid_argument);
}
