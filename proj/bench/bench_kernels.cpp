#include <benchmark/benchmark.h>

#include "orbifold/cycle_index.hpp"
#include "orbifold/fpgroup.hpp"
#include "orbifold/kernels.hpp"
#include "orbifold/transform.hpp"

using namespace orbifold;

namespace {

const PermGroup& wreath_s3_s3() {
  static const PermGroup w = wreath_product(builtin_group("S3"), builtin_group("S3"));
  return w;
}

const PermGroup& s6() {
  static const PermGroup g = symmetric_group(6);
  return g;
}

void BM_CommutingPairs(benchmark::State& state) {
  const auto& elems = wreath_s3_s3().elements();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commuting_pairs(elems));
}
void BM_CommutingPairsSerial(benchmark::State& state) {
  const auto& elems = wreath_s3_s3().elements();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commuting_pairs_serial(elems));
}

kernels::TuplePredicate f2_hom_check() {
  // Pairs of S_6 whose product is not the identity.
  return [](std::span<const kernels::Index> t) {
    const auto& e = s6().elements();
    return (e[t[0]] * e[t[1]]).is_identity() == false;
  };
}
void BM_CountTuples(benchmark::State& state) {
  const auto pred = f2_hom_check();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_tuples(s6().order(), 2, pred));
}
void BM_CountTuplesSerial(benchmark::State& state) {
  const auto pred = f2_hom_check();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_tuples_serial(s6().order(), 2, pred));
}

void BM_CycleIndicator(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cycle_indicator(wreath_s3_s3()));
}
void BM_CycleIndicatorSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cycle_indicator_serial(wreath_s3_s3()));
}

void BM_TransformZZ(benchmark::State& state) {
  const auto z = ClassFunction::symbolic_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(transform_ZZ(z, wreath_s3_s3(), HnfMatrix::identity()));
}
void BM_TransformZZSerial(benchmark::State& state) {
  const auto z = ClassFunction::symbolic_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(transform_ZZ_serial(z, wreath_s3_s3(), HnfMatrix::identity()));
}

}  // namespace

BENCHMARK(BM_CommutingPairs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutingPairsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTuples)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTuplesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleIndicator)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleIndicatorSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformZZ)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformZZSerial)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_threads", std::to_string(kernels::thread_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
