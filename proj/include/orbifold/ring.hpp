#pragma once

#include <string>
#include <variant>

#include "orbifold/poly.hpp"

namespace orbifold {

/// Element of the coefficient ring: an exact polynomial or a complex number.
///
/// Mixed arithmetic promotes constant polynomials to complex numbers; a
/// non-constant polynomial combined with a number is an error.
class RingElem {
 public:
  RingElem() = default;
  RingElem(Poly p) : value_(std::move(p)) {}  // NOLINT
  RingElem(Complex c) : value_(c) {}          // NOLINT
  RingElem(const Rational& r) : value_(Poly(r)) {}  // NOLINT
  RingElem(long long c) : value_(Poly(c)) {}        // NOLINT
  RingElem(int c) : value_(Poly(static_cast<long long>(c))) {}  // NOLINT
  RingElem(const Variable& v) : value_(Poly(v)) {}  // NOLINT

  bool is_poly() const noexcept { return std::holds_alternative<Poly>(value_); }
  bool is_complex() const noexcept { return std::holds_alternative<Complex>(value_); }
  const Poly& poly() const;   // throws std::bad_variant_access if numeric
  Complex complex() const;    // constant polynomials convert
  bool is_zero() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  /// Throws std::domain_error on zero.
  RingElem& operator/=(const Rational& c);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const Rational& c) { return a /= c; }

  RingElem pow(unsigned e) const;

  /// Exact equality; numbers compare bitwise.
  friend bool operator==(const RingElem& a, const RingElem& b);

  std::string to_string() const;

 private:
  std::variant<Poly, Complex> value_;
};

/// Exact for polynomials; relative tolerance for numbers.
bool approx_equal(const RingElem& a, const RingElem& b, double rel_tol);

}  // namespace orbifold
