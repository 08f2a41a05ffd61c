#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/numeric.hpp"

namespace orbifold {

class HnfMatrix;

/// Indeterminate families; the enum order is the monomial order of families.
enum class VarFamily : std::uint8_t {
  CycleT = 0,   // t_i, cycle-indicator indeterminates
  SeqZ = 1,     // z_n, class function of ℤ on nℤ
  LatticeZ = 2, // z_{μ,κ,λ}, class function of ℤ⊕ℤ on an HNF subgroup
  Named = 3,    // free-form symbol, e.g. values registered on a table
};

struct Variable {
  VarFamily family = VarFamily::Named;
  std::vector<BigInt> index;  // t, z_n: {n}; z_{μ,κ,λ}: {μ, κ, λ}
  std::string name;           // Named only

  static Variable t(const BigInt& i);
  static Variable z(const BigInt& n);
  static Variable z(const HnfMatrix& h);
  static Variable named(std::string name);
  /// Inverse of to_string(): "t_3", "z_5", "z_{1,0,2}", or an identifier.
  static Variable parse(const std::string& text);

  std::string to_string() const;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend bool operator<(const Variable& a, const Variable& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.index != b.index) return a.index < b.index;
    return a.name < b.name;
  }
};

/// Sorted (variable, exponent ≥ 1) list.
using Monomial = std::vector<std::pair<Variable, unsigned>>;

unsigned total_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Graded lex: higher total degree first, then lexicographic with smaller variables dominant.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients; zero terms are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long long c) : Poly(Rational(c)) {}  // NOLINT
  explicit Poly(const Variable& v);
  static Poly term(const Rational& c, Monomial m);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  /// Sum of coefficients (value at all variables = 1).
  Rational coefficient_sum() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  /// Throws std::domain_error on division by zero.
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned e) const;

  /// Replaces every variable v by value(v), computed in the same ring.
  Poly substitute(const std::function<Poly(const Variable&)>& value) const;
  /// Numeric evaluation.
  Complex evaluate(const std::function<Complex(const Variable&)>& value) const;

  /// e.g. "1/2*t_1^2 + 1/2*t_2"; "0" for zero.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

}  // namespace orbifold
