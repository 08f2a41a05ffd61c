#include "orbifold/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbifold::kernels {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::pair<Index, Index>> commuting_pairs_serial(std::span<const Permutation> elems) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < elems.size(); ++i)
    for (Index j = 0; j < elems.size(); ++j)
      if (commute(elems[i], elems[j])) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<Index, Index>> commuting_pairs(std::span<const Permutation> elems) {
  const auto n = static_cast<long long>(elems.size());
  std::vector<std::vector<std::pair<Index, Index>>> rows(elems.size());
  // Commutation is symmetric: test j >= i only, mirror afterwards.
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    for (long long j = i; j < n; ++j)
      if (commute(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))
        row.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  }
  std::vector<std::vector<Index>> partners(elems.size());
  for (const auto& row : rows)
    for (auto [i, j] : row) {
      partners[i].push_back(j);
      if (i != j) partners[j].push_back(i);
    }
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < partners.size(); ++i) {
    auto& p = partners[i];
    std::sort(p.begin(), p.end());
    for (Index j : p) out.emplace_back(i, j);
  }
  return out;
}

namespace {

// Advances `t` (digits in [0, n), last digit fastest) past position `from`.
bool advance(Tuple& t, std::size_t n, std::size_t from) {
  for (std::size_t k = t.size(); k-- > from;) {
    if (++t[k] < n) return true;
    t[k] = 0;
  }
  return false;
}

template <class Sink>
void scan_serial(std::size_t n, std::size_t arity, const TuplePredicate& accept, Sink&& sink) {
  if (arity == 0) {
    Tuple t;
    if (accept(t)) sink(t);
    return;
  }
  if (n == 0) return;
  Tuple t(arity, 0);
  do {
    if (accept(t)) sink(t);
  } while (advance(t, n, 0));
}

}  // namespace

std::vector<Tuple> filter_tuples_serial(std::size_t n, std::size_t arity,
                                        const TuplePredicate& accept) {
  std::vector<Tuple> out;
  scan_serial(n, arity, accept, [&](const Tuple& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_tuples_serial(std::size_t n, std::size_t arity, const TuplePredicate& accept) {
  std::uint64_t c = 0;
  scan_serial(n, arity, accept, [&](const Tuple&) { ++c; });
  return c;
}

std::vector<Tuple> filter_tuples(std::size_t n, std::size_t arity, const TuplePredicate& accept) {
  if (arity == 0 || n == 0) return filter_tuples_serial(n, arity, accept);
  // Partition on the leading digit; concatenating blocks keeps lexicographic order.
  std::vector<std::vector<Tuple>> blocks(n);
  ExceptionSink errors;
#pragma omp parallel for schedule(dynamic, 1)
  for (long long lead = 0; lead < static_cast<long long>(n); ++lead) {
    errors.run([&] {
      Tuple t(arity, 0);
      t[0] = static_cast<Index>(lead);
      auto& block = blocks[static_cast<std::size_t>(lead)];
      do {
        if (accept(t)) block.push_back(t);
      } while (advance(t, n, 1));
    });
  }
  errors.rethrow();
  std::vector<Tuple> out;
  for (auto& b : blocks)
    for (auto& t : b) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_tuples(std::size_t n, std::size_t arity, const TuplePredicate& accept) {
  if (arity == 0 || n == 0) return count_tuples_serial(n, arity, accept);
  std::uint64_t total = 0;
  ExceptionSink errors;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long long lead = 0; lead < static_cast<long long>(n); ++lead) {
    std::uint64_t local = 0;
    errors.run([&] {
      Tuple t(arity, 0);
      t[0] = static_cast<Index>(lead);
      do {
        if (accept(t)) ++local;
      } while (advance(t, n, 1));
    });
    total += local;
  }
  errors.rethrow();
  return total;
}

}  // namespace orbifold::kernels
