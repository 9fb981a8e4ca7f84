#include <benchmark/benchmark.h>

#include "bouquet/homology.hpp"
#include "bouquet/periods.hpp"
#include "bouquet/pl_oracle.hpp"
#include "bouquet/spectral.hpp"

namespace {

using namespace bouquet;

MapAction dominant_map() {
  return MapAction(4,
                   {Word::from_string("a1"), Word::from_string("a1 a3"),
                    Word::from_string("a1 a4"), Word::from_string("a1 a2 a4")},
                   BranchClass::free());
}

void BM_MatPow(benchmark::State& state) {
  const HomologyMatrix m = abelianize(dominant_map());
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(m, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_MatPow)->Arg(16)->Arg(256)->Arg(4096);

void BM_Census(benchmark::State& state) {
  const MapAction f = dominant_map();
  for (auto _ : state)
    benchmark::DoNotOptimize(per_census(f, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Census)->Arg(12)->Arg(60);

void BM_Eigenvalues(benchmark::State& state) {
  const HomologyMatrix m = abelianize(dominant_map());
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues);

void BM_IterateLift(benchmark::State& state) {
  const MapAction f(1, {Word::from_string("a1' a1'")}, BranchClass::free());
  const PLLift lift = build_lift(f);
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate_lift(lift, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_IterateLift)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
