#pragma once

#include <string>

#include "orbifold/perm_group.hpp"
#include "orbifold/ring.hpp"

namespace orbifold {

/// Cycle indicator P_Ω(t_1, …, t_d) = (1/|Ω|) Σ_x Π_{cycles c of x} t_{|c|}.
struct CycleIndex {
  std::string group;
  std::size_t degree = 0;
  Poly polynomial;
};

CycleIndex cycle_indicator(const PermGroup& omega);

/// Serial reference for cycle_indicator.
CycleIndex cycle_indicator_serial(const PermGroup& omega);

}  // namespace orbifold
