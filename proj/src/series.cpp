#include "orbifold/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbifold {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<RingElem> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  TruncatedSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator/=(const Rational& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s[0].is_zero()) throw std::invalid_argument("series_exp: constant term must vanish");
  // E' = s'E  ⇒  n e_n = Σ_{k=1..n} k s_k e_{n-k}.
  const unsigned order = s.order();
  TruncatedSeries e(order);
  e[0] = RingElem(1);
  if (std::any_of(s.coefficients().begin(), s.coefficients().end(),
                  [](const RingElem& x) { return x.is_complex(); }))
    e[0] = RingElem(Complex(1));
  for (unsigned n = 1; n <= order; ++n) {
    RingElem acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (s[k].is_zero()) continue;
      acc += (s[k] * e[n - k]) * RingElem(static_cast<long long>(k));
    }
    e[n] = acc / Rational(n);
  }
  return e;
}

}  // namespace orbifold
