#include "orbifold/symprod.hpp"

#include <stdexcept>

#include "orbifold/errors.hpp"

namespace orbifold {

std::vector<Poly> schur_polynomials(unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("schur_polynomials: order must be positive");
  TruncatedSeries s(n_max);
  for (unsigned n = 1; n <= n_max; ++n) s[n] = RingElem(Poly(Variable::t(n))) / Rational(n);
  const TruncatedSeries e = series_exp(s);
  std::vector<Poly> out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(e[n].poly());
  return out;
}

RingElem hecke_sum(const ClassFunction& z, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("hecke_sum: index must be positive");
  switch (z.domain()) {
    case Domain::Z: return z.value(n);  // nℤ is the only index-n subgroup
    case Domain::ZxZ: {
      RingElem total;
      for (const auto& h : hnf_enumerate(n)) total += z.value(h);
      return total;
    }
    case Domain::General: break;
  }
  throw std::invalid_argument("hecke_sum: domain must be Z or ZxZ");
}

namespace {

RingElem direct_symmetric_product(const ClassFunction& z, const PermGroup& sn,
                                  const TransformOptions& opts) {
  if (z.domain() == Domain::Z) return transform_Z(z, sn, 1, opts);
  if (z.domain() == Domain::ZxZ) return transform_ZZ(z, sn, HnfMatrix::identity(), opts);
  throw std::invalid_argument("symmetric_product: domain must be Z or ZxZ");
}

}  // namespace

RingElem symmetric_product(const ClassFunction& z, unsigned n, const TransformOptions& opts) {
  if (n == 0) return RingElem(1);
  if (n > opts.bounds.max_symmetric_degree)
    throw BoundExceeded("symmetric product degree " + std::to_string(n) + " exceeds bound " +
                        std::to_string(opts.bounds.max_symmetric_degree));
  const RingElem direct = direct_symmetric_product(z, symmetric_group(n, opts.bounds), opts);

  std::vector<RingElem> hecke;
  for (unsigned k = 1; k <= n; ++k) hecke.push_back(hecke_sum(z, k));
  const Poly pn = schur_polynomials(n).back();
  RingElem closed;
  for (const auto& [mono, coeff] : pn.terms()) {
    RingElem term(coeff);
    for (const auto& [var, e] : mono)
      term *= hecke[var.index[0].convert_to<std::size_t>() - 1].pow(e);
    closed += term;
  }
  if (!approx_equal(direct, closed, opts.rel_tol))
    throw ConsistencyError("symmetric_product: direct value " + direct.to_string() +
                           " differs from closed form " + closed.to_string());
  return direct;
}

ExpoidReport expoid_verify(const ClassFunction& z, unsigned order, const TransformOptions& opts) {
  if (order > opts.bounds.max_symmetric_degree)
    throw BoundExceeded("expoid_verify: order exceeds the symmetric degree bound");
  TruncatedSeries lhs(order), exponent(order);
  lhs[0] = RingElem(1);
  for (unsigned n = 1; n <= order; ++n) {
    lhs[n] = direct_symmetric_product(z, symmetric_group(n, opts.bounds), opts);
    exponent[n] = hecke_sum(z, n) / Rational(n);
  }
  ExpoidReport r{lhs, series_exp(exponent), false};
  r.equal = true;
  for (unsigned n = 0; n <= order; ++n)
    r.equal = r.equal && approx_equal(r.lhs[n], r.rhs[n], opts.rel_tol);
  return r;
}

}  // namespace orbifold
