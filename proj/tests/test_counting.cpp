#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/counting.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/transform.hpp"

using namespace orbifold;

namespace {
std::shared_ptr<const Presentation> pres(const char* name) {
  return std::make_shared<const Presentation>(Presentation::builtin(name));
}
}  // namespace

TEST_CASE("transitive centralizers") {
  const auto z = pres("Z");
  const Homomorphism cyc(z, 4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  const auto t = orbit_stabilizer_action(cyc, Orbit{0, 1, 2, 3});
  CHECK(transitive_centralizer_order(t) == 4);
  const auto f2 = pres("F2");
  const Homomorphism s3(f2, 3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(transitive_centralizer_order(orbit_stabilizer_action(s3, Orbit{0, 1, 2})) == 1);
}

TEST_CASE("class sizes agree with brute-force conjugation orbits") {
  for (const char* name : {"Z", "ZxZ", "F2"})
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto p = pres(name);
      const auto c = census(p, n);
      std::uint64_t total = 0;
      for (const auto& cls : c.classes) {
        const auto& im = cls.representative.images();
        CHECK(cls.predicted_size == oracle::conjugation_orbit(im, n));
        CHECK(cls.observed_size == cls.predicted_size);
        CHECK(class_size(cls.representative) == class_size_by_centralizer(cls.representative));
        CHECK(centralizer_order_formula(cls.representative) == oracle::centralizer_order(im, n));
        total += cls.observed_size;
      }
      CHECK(total == c.hom_count);
    }
}

TEST_CASE("census class counts") {
  // Hom(ℤ, S_n)/S_n ↔ partitions of n; Hom(trivial, S_n) is a single class.
  const std::size_t partitions[] = {1, 1, 2, 3, 5, 7};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(census(pres("Z"), n).classes.size() == partitions[n]);
    CHECK(census(pres("trivial"), n).classes.size() == 1);
  }
  CHECK_THROWS_AS(census(pres("Z"), 6), BoundExceeded);
}

TEST_CASE("census transform sum reproduces the symmetric product") {
  const auto zf = ClassFunction::symbolic_sequence();
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = census(pres("Z"), n);
    CHECK(census_transform_sum(c, zf) == transform_Z(zf, symmetric_group(n), 1));
  }
}

TEST_CASE("census TSV") {
  const auto tsv = census_tsv(census(pres("Z"), 2));
  CHECK(tsv ==
        "class\trepresentative\tdecomposition\tell\tpredicted\tobserved\n"
        "0\t()\t2x1\t1\t1\t1\n"
        "1\t(0 1)\t1x2\t2\t1\t1\n");
}
