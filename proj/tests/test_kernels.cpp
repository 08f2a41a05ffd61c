#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/kernels.hpp"
#include "orbifold/perm_group.hpp"

using namespace orbifold;

TEST_CASE("parallel kernels agree with the serial references") {
  const auto s4 = symmetric_group(4);
  CHECK(kernels::commuting_pairs(s4.elements()) == kernels::commuting_pairs_serial(s4.elements()));

  const kernels::TuplePredicate even_sum = [](std::span<const kernels::Index> t) {
    unsigned s = 0;
    for (auto v : t) s += v;
    return s % 3 == 0;
  };
  CHECK(kernels::filter_tuples(7, 3, even_sum) == kernels::filter_tuples_serial(7, 3, even_sum));
  CHECK(kernels::count_tuples(9, 3, even_sum) == kernels::count_tuples_serial(9, 3, even_sum));
  CHECK(kernels::count_tuples(5, 0, even_sum) == 1);

  auto key = [&](std::size_t i) { return s4.elements()[i].cycle_type(); };
  using Key = std::vector<std::size_t>;
  CHECK(kernels::histogram<Key>(s4.order(), key) == kernels::histogram_serial<Key>(s4.order(), key));

  auto sq = [](std::size_t i) { return i * i; };
  CHECK(kernels::map_indexed<std::size_t>(100, sq) == kernels::map_indexed_serial<std::size_t>(100, sq));
}

TEST_CASE("filtered tuples are lexicographic") {
  const auto t = kernels::filter_tuples(4, 2, [](std::span<const kernels::Index> x) { return x[0] != x[1]; });
  CHECK(t.size() == 12);
  CHECK(std::is_sorted(t.begin(), t.end()));
}

TEST_CASE("exceptions inside parallel regions propagate") {
  CHECK_THROWS_AS(kernels::map_indexed<int>(50,
                                            [](std::size_t i) -> int {
                                              if (i == 17) throw std::runtime_error("boom");
                                              return 0;
                                            }),
                  std::runtime_error);
  CHECK_THROWS_AS(kernels::count_tuples(6, 2,
                                        [](std::span<const kernels::Index> x) -> bool {
                                          if (x[0] == 3) throw std::domain_error("boom");
                                          return true;
                                        }),
                  std::domain_error);
}
