#pragma once

#include <vector>

#include "orbifold/ring.hpp"

namespace orbifold {

/// Power series c_0 + c_1 p + … + c_N p^N in a formal variable p kept apart
/// from the polynomial indeterminates; all orders above N are discarded.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1, RingElem{}) {}
  TruncatedSeries(unsigned order, std::vector<RingElem> coeffs);

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const RingElem& operator[](unsigned n) const { return coeffs_.at(n); }
  RingElem& operator[](unsigned n) { return coeffs_.at(n); }
  const std::vector<RingElem>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator/=(const Rational& c);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<RingElem> coeffs_;
};

/// exp(s) truncated at s.order(). Throws std::invalid_argument if c_0 ≠ 0.
TruncatedSeries series_exp(const TruncatedSeries& s);

}  // namespace orbifold
