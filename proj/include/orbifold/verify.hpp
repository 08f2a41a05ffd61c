#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbifold/bounds.hpp"

namespace orbifold {

struct VerifyConfig {
  Bounds bounds = default_bounds();
  std::uint64_t wreath_limit = 10'000;  // largest |Ω1≀Ω2| in the pair set
  unsigned expoid_order_z = 6;
  unsigned expoid_order_zz = 4;
  unsigned symprod_max = 5;
  unsigned schur_max = 6;
  unsigned census_max = 5;
  unsigned q_order = 20;
  double rel_tol = 1e-9;
  double modular_tol = 1e-6;
  unsigned samples = 10;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// transitivity, expoid, symprod, counting, lemmas, modular, trivial-law, basepoint.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite; bound violations propagate.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& config = {});

}  // namespace orbifold
