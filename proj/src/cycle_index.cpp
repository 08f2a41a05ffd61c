#include "orbifold/cycle_index.hpp"

#include "orbifold/kernels.hpp"

namespace orbifold {

namespace {

CycleIndex assemble(const PermGroup& omega,
                    const std::map<std::vector<std::size_t>, std::uint64_t>& types) {
  CycleIndex ci{omega.name(), omega.degree(), {}};
  for (const auto& [type, count] : types) {
    Monomial m;
    for (std::size_t len : type) m.emplace_back(Variable::t(len), 1u);
    ci.polynomial += Poly::term(Rational(count), std::move(m));
  }
  ci.polynomial /= Rational(omega.order());
  return ci;
}

}  // namespace

CycleIndex cycle_indicator(const PermGroup& omega) {
  const auto& elems = omega.elements();
  return assemble(omega, kernels::histogram<std::vector<std::size_t>>(
                             elems.size(), [&](std::size_t i) { return elems[i].cycle_type(); }));
}

CycleIndex cycle_indicator_serial(const PermGroup& omega) {
  const auto& elems = omega.elements();
  return assemble(omega, kernels::histogram_serial<std::vector<std::size_t>>(
                             elems.size(), [&](std::size_t i) { return elems[i].cycle_type(); }));
}

}  // namespace orbifold
