#pragma once

// Data-parallel enumeration kernels. Every kernel has a `_serial` twin that is
// the reference implementation; both must return identical results.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "orbifold/permutation.hpp"

namespace orbifold::kernels {

using Index = std::uint32_t;
using Tuple = std::vector<Index>;
using TuplePredicate = std::function<bool(std::span<const Index>)>;

/// Captures the first exception thrown inside a parallel region so it can be
/// rethrown on the calling thread.
class ExceptionSink {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
#pragma omp critical(orbifold_exception_sink)
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::exception_ptr first_;
};

/// Ordered index pairs (i, j) with elems[i]·elems[j] = elems[j]·elems[i], lexicographic.
std::vector<std::pair<Index, Index>> commuting_pairs(std::span<const Permutation> elems);
std::vector<std::pair<Index, Index>> commuting_pairs_serial(std::span<const Permutation> elems);

/// All `arity`-tuples over [0, n) accepted by `accept`, in lexicographic order.
std::vector<Tuple> filter_tuples(std::size_t n, std::size_t arity, const TuplePredicate& accept);
std::vector<Tuple> filter_tuples_serial(std::size_t n, std::size_t arity,
                                        const TuplePredicate& accept);

std::uint64_t count_tuples(std::size_t n, std::size_t arity, const TuplePredicate& accept);
std::uint64_t count_tuples_serial(std::size_t n, std::size_t arity, const TuplePredicate& accept);

/// Multiplicity of key_of(i) over i in [0, n).
template <class Key, class KeyFn>
std::map<Key, std::uint64_t> histogram_serial(std::size_t n, KeyFn&& key_of) {
  std::map<Key, std::uint64_t> out;
  for (std::size_t i = 0; i < n; ++i) ++out[key_of(i)];
  return out;
}

template <class Key, class KeyFn>
std::map<Key, std::uint64_t> histogram(std::size_t n, KeyFn&& key_of) {
  std::map<Key, std::uint64_t> out;
  ExceptionSink errors;
#pragma omp parallel
  {
    std::map<Key, std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      errors.run([&] { ++local[key_of(static_cast<std::size_t>(i))]; });
#pragma omp critical(orbifold_histogram_merge)
    for (auto& [k, c] : local) out[k] += c;
  }
  errors.rethrow();
  return out;
}

/// Applies fn to every i in [0, n) and returns the results in index order.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  ExceptionSink errors;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    errors.run([&] { out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i)); });
  errors.rethrow();
  return out;
}

template <class T, class Fn>
std::vector<T> map_indexed_serial(std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

int thread_count();

}  // namespace orbifold::kernels
