#include "orbifold/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbifold/errors.hpp"

namespace orbifold {

Rational parse_rational(const std::string& text) {
  auto digits_ok = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), ::isdigit);
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) throw ParseError("bad rational '" + text + "'");
  BigInt n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(n, d);
}

HnfMatrix::HnfMatrix(BigInt mu, BigInt kappa, BigInt lambda)
    : mu_(std::move(mu)), kappa_(std::move(kappa)), lambda_(std::move(lambda)) {
  if (mu_ < 1 || lambda_ < 1 || kappa_ < 0 || kappa_ >= lambda_)
    throw std::invalid_argument("not a Hermite normal form: " + to_string());
}

bool HnfMatrix::contains(const LatticeVector& v) const {
  const auto& [i, j] = v;
  if (j % mu_ != 0) return false;
  return (i - kappa_ * (j / mu_)) % lambda_ == 0;
}

std::string HnfMatrix::to_string() const {
  return "(" + mu_.str() + "," + kappa_.str() + "," + lambda_.str() + ")";
}

HnfMatrix hnf_canonicalize(const LatticeVector& v1, const LatticeVector& v2) {
  if (v1.first * v2.second - v1.second * v2.first == 0)
    throw std::invalid_argument("hnf_canonicalize: vectors do not span a rank-2 lattice");
  LatticeVector r1 = v1, r2 = v2;
  // Unimodular row reduction on the b-coordinate until r2 = (α, 0).
  while (r2.second != 0) {
    const BigInt q = r1.second / r2.second;
    r1.first -= q * r2.first;
    r1.second -= q * r2.second;
    std::swap(r1, r2);
  }
  if (r1.second < 0) {
    r1.first = -r1.first;
    r1.second = -r1.second;
  }
  BigInt lambda = abs(r2.first);
  return HnfMatrix(r1.second, floor_mod(r1.first, lambda), lambda);
}

std::vector<HnfMatrix> hnf_enumerate(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("hnf_enumerate: index must be positive");
  std::vector<HnfMatrix> out;
  for (BigInt lambda = 1; lambda <= n; ++lambda) {
    if (n % lambda != 0) continue;
    for (BigInt kappa = 0; kappa < lambda; ++kappa) out.emplace_back(n / lambda, kappa, lambda);
  }
  return out;
}

HnfMatrix hnf_compose(const HnfMatrix& inner, const HnfMatrix& outer) {
  // Coordinates (i, j) relative to outer mean i·(λo, 0) + j·(κo, μo).
  auto ambient = [&](const LatticeVector& v) -> LatticeVector {
    return {v.first * outer.lambda() + v.second * outer.kappa(), v.second * outer.mu()};
  };
  return hnf_canonicalize(ambient(inner.first_basis()), ambient(inner.second_basis()));
}

HnfMatrix orbit_hnf(const Permutation& x, const Permutation& y, const Orbit& orbit,
                    std::optional<Point> basepoint) {
  if (!commute(x, y)) throw std::invalid_argument("orbit_hnf: x and y do not commute");
  if (orbit.empty()) throw std::invalid_argument("orbit_hnf: empty orbit");
  const Point base = basepoint.value_or(orbit.front());
  if (!std::binary_search(orbit.begin(), orbit.end(), base))
    throw std::invalid_argument("orbit_hnf: basepoint not in orbit");

  // Position of each point along the x-cycle through the basepoint.
  std::vector<long> step(x.degree(), -1);
  long lambda = 0;
  for (Point p = base; step[p] < 0; p = x(p)) step[p] = lambda++;

  long mu = 1;
  Point p = y(base);
  while (step[p] < 0) {
    p = y(p);
    ++mu;
    if (mu > static_cast<long>(x.degree())) throw std::logic_error("orbit_hnf: no return");
  }
  // y^μ(base) = x^s(base); x^κ y^μ fixes base for κ = -s mod λ.
  const long s = step[p];
  const long kappa = (lambda - s) % lambda;
  if (static_cast<std::size_t>(mu * lambda) != orbit.size())
    throw std::invalid_argument("orbit_hnf: points do not form an orbit of <x, y>");
  return HnfMatrix(mu, kappa, lambda);
}

Complex tau_of(const HnfMatrix& h, Complex tau) {
  if (!(tau.imag() > 0)) throw std::invalid_argument("tau_of: Im tau must be positive");
  const double mu = h.mu().convert_to<double>();
  const double kappa = h.kappa().convert_to<double>();
  const double lambda = h.lambda().convert_to<double>();
  return (mu * tau + kappa) / lambda;
}

}  // namespace orbifold
