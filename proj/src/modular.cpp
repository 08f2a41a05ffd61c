#include "orbifold/modular.hpp"

#include <numbers>
#include <stdexcept>

#include "orbifold/errors.hpp"

namespace orbifold {

namespace {

using Series = std::vector<BigInt>;

Series mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<BigInt> klein_j_coefficients(unsigned order) {
  const std::size_t len = order + 2;  // q^{-1} … q^M after dividing by q
  Series e4(len, 0);
  e4[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    BigInt sigma3 = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma3 += BigInt(d) * d * d;
    e4[n] = 240 * sigma3;
  }
  // Δ/q = Π_{n≥1} (1 − q^n)^24
  Series eta24(len, 0);
  eta24[0] = 1;
  for (std::size_t n = 1; n < len; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t k = len - 1; k >= n; --k) eta24[k] -= eta24[k - n];
  const Series num = mul(mul(e4, e4, len), e4, len);
  Series quotient(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    BigInt acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= eta24[i] * quotient[k - i];
    quotient[k] = acc;  // eta24[0] = 1
  }
  return quotient;
}

KleinJ::KleinJ(unsigned order) {
  for (const auto& c : klein_j_coefficients(order)) coeffs_.push_back(c.convert_to<double>());
}

Complex KleinJ::operator()(Complex tau) const {
  if (tau.imag() <= 0) throw std::invalid_argument("j(τ) requires Im τ > 0");
  const Complex q = std::exp(Complex(0, 2 * std::numbers::pi) * tau);
  Complex acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + coeffs_[k];
  return acc / q;
}

TorusInvariant builtin_invariant(const std::string& name, unsigned order) {
  if (name == "constant") return [](Complex) { return Complex(1); };
  if (name == "klein-j") return KleinJ(order);
  throw ParseError("unknown invariant '" + name + "' (expected constant or klein-j)");
}

Complex torus_partition_function(const PermGroup& omega, const TorusInvariant& f, Complex tau,
                                 const TransformOptions& opts) {
  if (tau.imag() <= 0) throw std::invalid_argument("Im τ must be positive");
  const auto z = ClassFunction::numeric_lattice(f, tau);
  return transform_ZZ(z, omega, HnfMatrix::identity(), opts).complex();
}

}  // namespace orbifold
