#pragma once

// Independent brute-force reference computations used to freeze expected values.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orbifold/lattice.hpp"
#include "orbifold/numeric.hpp"
#include "orbifold/permutation.hpp"

namespace oracle {

using orbifold::BigInt;
using orbifold::Permutation;
using orbifold::Point;

inline Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Permutation(img);
}

inline std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Orbits by repeated breadth-first search, sorted by minimum.
inline std::vector<std::vector<Point>> orbits(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orbit{s}, queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Point p = queue.back();
      queue.pop_back();
      for (const auto& g : gens)
        for (Point q : {g(p), g.inverse()(p)})
          if (!seen[q]) {
            seen[q] = 1;
            orbit.push_back(q);
            queue.push_back(q);
          }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

inline std::uint64_t centralizer_order(const std::vector<Permutation>& perms, std::size_t n) {
  std::uint64_t count = 0;
  for (const auto& c : all_perms(n)) {
    bool ok = true;
    for (const auto& p : perms) ok = ok && (c * p == p * c);
    count += ok;
  }
  return count;
}

inline std::size_t class_count(const std::vector<Permutation>& elems) {
  std::set<Permutation> done;
  std::size_t classes = 0;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    ++classes;
    for (const auto& g : elems) done.insert(g * x * g.inverse());
  }
  return classes;
}

// Size of the S_n-orbit of a generator tuple under simultaneous conjugation.
inline std::size_t conjugation_orbit(const std::vector<Permutation>& tuple, std::size_t n) {
  std::set<std::vector<Permutation>> orbit;
  for (const auto& a : all_perms(n)) {
    std::vector<Permutation> c;
    for (const auto& p : tuple) c.push_back(a.inverse() * p * a);
    orbit.insert(c);
  }
  return orbit.size();
}

inline BigInt sigma1(unsigned n) {
  BigInt s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Stabilizer lattice of `base` under commuting x, y, found by scanning a box.
inline orbifold::HnfMatrix stabilizer_hnf(const Permutation& x, const Permutation& y, Point base) {
  const long n = static_cast<long>(x.degree());
  auto fixes = [&](long i, long j) {
    return x.pow(i)(y.pow(j)(base)) == base;
  };
  long lambda = 1;
  while (!fixes(lambda, 0)) ++lambda;
  for (long mu = 1; mu <= n; ++mu)
    for (long k = 0; k < lambda; ++k)
      if (fixes(k, mu)) return {mu, k, lambda};
  throw std::logic_error("no stabilizer vector in box");
}

// Membership of (i, j) in the lattice spanned by rows v1, v2 via a bounded search.
inline bool in_span(const orbifold::LatticeVector& v1, const orbifold::LatticeVector& v2,
                    long i, long j, long box) {
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      if (a * v1.first + b * v2.first == i && a * v1.second + b * v2.second == j) return true;
  return false;
}

// j = E_6^2/Δ + 1728 as integer q-series from q^{-1}.
inline std::vector<BigInt> j_coefficients(unsigned order) {
  const std::size_t len = order + 2;
  std::vector<BigInt> e6(len, 0), delta(len, 0);
  e6[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    BigInt s5 = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) s5 += boost::multiprecision::pow(BigInt(d), 5);
    e6[n] = -504 * s5;
  }
  // Δ/q via Euler's pentagonal theorem raised to the 24th power by repeated multiplication.
  std::vector<BigInt> eta(len, 0);
  for (long k = -static_cast<long>(len); k <= static_cast<long>(len); ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < static_cast<long>(len)) eta[e] += (k % 2 == 0) ? 1 : -1;
  }
  auto mul = [len](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(len, 0);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t k = 0; i + k < len; ++k) c[i + k] += a[i] * b[k];
    return c;
  };
  delta[0] = 1;
  for (int r = 0; r < 24; ++r) delta = mul(delta, eta);
  const auto num = mul(e6, e6);
  std::vector<BigInt> quo(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    BigInt acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= delta[i] * quo[k - i];
    quo[k] = acc;
  }
  quo[1] += 1728;
  return quo;
}

}  // namespace oracle
