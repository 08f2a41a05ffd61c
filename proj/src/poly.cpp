#include "orbifold/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "orbifold/errors.hpp"
#include "orbifold/lattice.hpp"

namespace orbifold {

Variable Variable::t(const BigInt& i) {
  if (i < 1) throw std::invalid_argument("t_i needs a positive index");
  return {VarFamily::CycleT, {i}, {}};
}

Variable Variable::z(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("z_n needs a positive index");
  return {VarFamily::SeqZ, {n}, {}};
}

Variable Variable::z(const HnfMatrix& h) {
  return {VarFamily::LatticeZ, {h.mu(), h.kappa(), h.lambda()}, {}};
}

Variable Variable::named(std::string name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) ||
      !std::all_of(name.begin(), name.end(),
                   [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
    throw ParseError("bad symbol name '" + name + "'");
  if ((name.size() > 2 && (name.rfind("t_", 0) == 0 || name.rfind("z_", 0) == 0)))
    throw ParseError("symbol '" + name + "' collides with the t_/z_ families");
  return {VarFamily::Named, {}, std::move(name)};
}

Variable Variable::parse(const std::string& text) {
  auto positive = [&](const std::string& s) {
    if (s.empty() || s.size() > 30 || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw ParseError("bad variable '" + text + "'");
    BigInt v(s);
    if (v < 1) throw ParseError("bad variable '" + text + "'");
    return v;
  };
  if (text.rfind("t_", 0) == 0) return t(positive(text.substr(2)));
  if (text.rfind("z_{", 0) == 0 && text.back() == '}') {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(3, text.size() - 4));
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw ParseError("bad variable '" + text + "'");
    const BigInt kappa = parts[1] == "0" ? BigInt(0) : positive(parts[1]);
    try {
      return z(HnfMatrix(positive(parts[0]), kappa, positive(parts[2])));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad variable '" + text + "'");
    }
  }
  if (text.rfind("z_", 0) == 0) return z(positive(text.substr(2)));
  return named(text);
}

std::string Variable::to_string() const {
  switch (family) {
    case VarFamily::CycleT: return "t_" + index[0].str();
    case VarFamily::SeqZ: return "z_" + index[0].str();
    case VarFamily::LatticeZ:
      return "z_{" + index[0].str() + "," + index[1].str() + "," + index[2].str() + "}";
    case VarFamily::Named: return name;
  }
  return name;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].first != b[k].first) return a[k].first < b[k].first;
    if (a[k].second != b[k].second) return a[k].second > b[k].second;
  }
  return a.size() < b.size();
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly::Poly(const Variable& v) { terms_.emplace(Monomial{{v, 1u}}, Rational(1)); }

Poly Poly::term(const Rational& c, Monomial m) {
  std::sort(m.begin(), m.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Monomial merged;
  for (auto& [v, e] : m) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(std::move(v), e);
  }
  Poly p;
  p.add_term(merged, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  for (auto& [m, v] : terms_) v /= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(Rational(1)), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Poly Poly::substitute(const std::function<Poly(const Variable&)>& value) const {
  Poly out;
  std::map<Variable, Poly> cache;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      t *= it->second.pow(e);
    }
    out += t;
  }
  return out;
}

Complex Poly::evaluate(const std::function<Complex(const Variable&)>& value) const {
  Complex out = 0;
  for (const auto& [m, c] : terms_) {
    Complex t = c.convert_to<double>();
    for (const auto& [v, e] : m) t *= std::pow(value(v), static_cast<int>(e));
    out += t;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    } else if (a < 0) {
      os << '-';
      a = -a;
    }
    first = false;
    const bool unit = a == 1;
    if (!unit || m.empty()) {
      os << (boost::multiprecision::denominator(a) == 1 ? boost::multiprecision::numerator(a).str()
                                                        : rational_to_string(a));
      if (!m.empty()) os << '*';
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) os << '*';
      os << m[k].first.to_string();
      if (m[k].second > 1) os << '^' << m[k].second;
    }
  }
  return os.str();
}

}  // namespace orbifold
