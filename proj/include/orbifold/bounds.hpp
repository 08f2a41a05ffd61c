#pragma once

#include <cstdint>

namespace orbifold {

// Hard limits on the brute-force enumerations.
struct Bounds {
  std::uint64_t max_elements = 2'000'000;      // per enumerated permutation group
  std::uint64_t max_word_evals = 100'000'000;  // per homomorphism enumeration
  unsigned max_symmetric_degree = 7;           // S_n in symmetric products
  unsigned max_census_degree = 5;
};

inline const Bounds& default_bounds() {
  static const Bounds b{};
  return b;
}

}  // namespace orbifold
