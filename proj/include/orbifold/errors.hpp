#pragma once

#include <stdexcept>
#include <string>

namespace orbifold {

/// Enumeration or work bound exceeded; never a silent truncation.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input (JSON, words, group specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lookup of a subgroup handle whose conjugacy class was never registered.
class UnregisteredClass : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace orbifold
