#include "orbifold/counting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orbifold/errors.hpp"
#include "orbifold/kernels.hpp"

namespace orbifold {

std::uint64_t transitive_centralizer_order(const TransitiveAction& tau, const Bounds& bounds) {
  return centralizer_in_sym(tau.action.images(), tau.degree(), bounds).order();
}

namespace {

std::vector<ConstituentSummary> summarize(const Homomorphism& phi, const Bounds& bounds) {
  std::vector<ConstituentSummary> out;
  for (const auto& c : decompose_transitives(phi).constituents)
    out.push_back({c.multiplicity, c.action.degree(), transitive_centralizer_order(c.action, bounds)});
  return out;
}

BigInt formula_from(const std::vector<ConstituentSummary>& parts) {
  BigInt order = 1;
  for (const auto& p : parts)
    order *= BigInt(factorial(static_cast<unsigned>(p.multiplicity))) *
             boost::multiprecision::pow(BigInt(p.ell), static_cast<unsigned>(p.multiplicity));
  return order;
}

BigInt degree_factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt centralizer_order_formula(const Homomorphism& phi, const Bounds& bounds) {
  return formula_from(summarize(phi, bounds));
}

BigInt class_size(const Homomorphism& phi, const Bounds& bounds) {
  return degree_factorial(phi.degree()) / centralizer_order_formula(phi, bounds);
}

BigInt class_size_by_centralizer(const Homomorphism& phi, const Bounds& bounds) {
  return degree_factorial(phi.degree()) /
         BigInt(centralizer_in_sym(phi.images(), phi.degree(), bounds).order());
}

ClassCensus census(std::shared_ptr<const Presentation> g, std::size_t n, const Bounds& bounds) {
  if (n > bounds.max_census_degree)
    throw BoundExceeded("census degree " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bounds.max_census_degree));
  const PermGroup sn = symmetric_group(n, bounds);
  const auto tuples = enumerate_hom_tuples(*g, sn, bounds);
  const auto& elems = sn.elements();

  // Conjugation preserves generator cycle types and orbit sizes; bucket on them first.
  using Key = std::vector<std::vector<std::size_t>>;
  std::map<Key, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Key key;
    std::vector<Permutation> images;
    for (auto k : tuples[i]) {
      key.push_back(elems[k].cycle_type());
      images.push_back(elems[k]);
    }
    std::vector<std::size_t> sizes;
    for (const auto& o : orbits(images, n)) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    key.push_back(std::move(sizes));
    buckets[key].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> bucket_list;
  for (const auto& [k, members] : buckets) bucket_list.push_back(&members);

  auto images_of = [&](std::size_t i) {
    std::vector<Permutation> images;
    for (auto k : tuples[i]) images.push_back(elems[k]);
    return images;
  };
  struct Partial {
    std::size_t first;
    std::uint64_t count;
  };
  const auto per_bucket = kernels::map_indexed<std::vector<Partial>>(
      bucket_list.size(), [&](std::size_t b) {
        std::vector<Partial> classes;
        std::vector<std::vector<Permutation>> reps;
        for (std::size_t i : *bucket_list[b]) {
          const auto images = images_of(i);
          auto hit = std::find_if(reps.begin(), reps.end(), [&](const auto& r) {
            return conjugating_permutation(r, images, n).has_value();
          });
          if (hit != reps.end()) {
            ++classes[static_cast<std::size_t>(hit - reps.begin())].count;
          } else {
            reps.push_back(images);
            classes.push_back({i, 1});
          }
        }
        return classes;
      });

  std::vector<Partial> all;
  for (const auto& b : per_bucket) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end(), [](const Partial& a, const Partial& b) { return a.first < b.first; });

  ClassCensus out{g, n, tuples.size(), {}};
  for (const auto& p : all) {
    Homomorphism rep(g, n, images_of(p.first));
    auto parts = summarize(rep, bounds);
    BigInt predicted = degree_factorial(n) / formula_from(parts);
    out.classes.push_back({std::move(rep), std::move(parts), std::move(predicted), p.count});
  }
  return out;
}

RingElem census_transform_sum(const ClassCensus& c, const ClassFunction& z) {
  RingElem total;
  for (const auto& cls : c.classes) {
    RingElem term(Rational(cls.predicted_size));
    for (const auto& con : decompose_transitives(cls.representative).constituents)
      term *= z.value(con.action).pow(static_cast<unsigned>(con.multiplicity));
    total += term;
  }
  return total / Rational(degree_factorial(c.degree));
}

std::string census_tsv(const ClassCensus& c) {
  std::ostringstream os;
  os << "class\trepresentative\tdecomposition\tell\tpredicted\tobserved\n";
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    os << i << '\t';
    const auto& im = cls.representative.images();
    for (std::size_t g = 0; g < im.size(); ++g) os << (g ? ";" : "") << im[g].to_string();
    if (im.empty()) os << "-";
    os << '\t';
    for (std::size_t k = 0; k < cls.decomposition.size(); ++k)
      os << (k ? "+" : "") << cls.decomposition[k].multiplicity << "x" << cls.decomposition[k].degree;
    os << '\t';
    for (std::size_t k = 0; k < cls.decomposition.size(); ++k)
      os << (k ? "," : "") << cls.decomposition[k].ell;
    os << '\t' << cls.predicted_size << '\t' << cls.observed_size << '\n';
  }
  return os.str();
}

}  // namespace orbifold
