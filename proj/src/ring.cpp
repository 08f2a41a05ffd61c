#include "orbifold/ring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbifold {

namespace {

Complex to_complex(const Poly& p) {
  if (!p.is_constant()) throw std::invalid_argument("non-constant polynomial used as a number");
  return p.constant_term().convert_to<double>();
}

}  // namespace

const Poly& RingElem::poly() const { return std::get<Poly>(value_); }

Complex RingElem::complex() const {
  if (is_complex()) return std::get<Complex>(value_);
  return to_complex(std::get<Poly>(value_));
}

bool RingElem::is_zero() const {
  if (is_poly()) return poly().is_zero();
  return std::get<Complex>(value_) == Complex(0);
}

RingElem& RingElem::operator+=(const RingElem& o) {
  if (is_poly() && o.is_poly())
    std::get<Poly>(value_) += o.poly();
  else
    value_ = complex() + o.complex();
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  if (is_poly() && o.is_poly())
    std::get<Poly>(value_) -= o.poly();
  else
    value_ = complex() - o.complex();
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  if (is_poly() && o.is_poly())
    std::get<Poly>(value_) *= o.poly();
  else
    value_ = complex() * o.complex();
  return *this;
}

RingElem& RingElem::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("ring division by zero");
  if (is_poly())
    std::get<Poly>(value_) /= c;
  else
    value_ = std::get<Complex>(value_) / c.convert_to<double>();
  return *this;
}

RingElem RingElem::pow(unsigned e) const {
  if (is_poly()) return poly().pow(e);
  return std::pow(std::get<Complex>(value_), static_cast<int>(e));
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.is_poly() && b.is_poly()) return a.poly() == b.poly();
  if (a.is_complex() && b.is_complex()) return a.complex() == b.complex();
  const Poly& p = a.is_poly() ? a.poly() : b.poly();
  return p.is_constant() && to_complex(p) == (a.is_poly() ? b.complex() : a.complex());
}

std::string RingElem::to_string() const {
  if (is_poly()) return poly().to_string();
  std::ostringstream os;
  os.precision(17);
  const Complex c = std::get<Complex>(value_);
  os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

bool approx_equal(const RingElem& a, const RingElem& b, double rel_tol) {
  if (a.is_poly() && b.is_poly()) return a == b;
  const Complex x = a.complex(), y = b.complex();
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) <= rel_tol * scale;
}

}  // namespace orbifold
