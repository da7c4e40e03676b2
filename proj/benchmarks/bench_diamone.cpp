#include <benchmark/benchmark.h>

#include "diamone/diamone.hpp"

using namespace diamone;

namespace {

// Resolution of a degree-6 genus-3 curve with a one-dimensional module.
BettiTable sample_table() {
  return table_from_json(
      R"({"beta1":{"4":3,"2":1},"beta2":{"5":4},"beta3":{"6":1}})");
}

void BM_CountComponents(benchmark::State& state) {
  const FiveTuple t{3, 7, 5, 5, 6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_components(t));
  }
}
BENCHMARK(BM_CountComponents);

void BM_EnumerateMinimal(benchmark::State& state) {
  const FiveTuple t{3, 7, 5, 5, 6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minimal(t));
  }
}
BENCHMARK(BM_EnumerateMinimal);

void BM_EnumerateMinimalLarge(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const FiveTuple t{n, n, n, n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minimal(t));
  }
}
BENCHMARK(BM_EnumerateMinimalLarge)->Arg(8)->Arg(16)->Arg(32);

void BM_SpecializationLattice(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const FiveTuple t{n, n, n, n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(specialization_lattice(t));
  }
}
BENCHMARK(BM_SpecializationLattice)->Arg(2)->Arg(4)->Arg(6);

void BM_HilbertFunction(benchmark::State& state) {
  const BettiTable table = sample_table();
  for (auto _ : state) {
    for (std::int64_t v = -3; v <= 12; ++v) {
      benchmark::DoNotOptimize(hilbert_function(table, v));
    }
  }
}
BENCHMARK(BM_HilbertFunction);

void BM_DegreeGenus(benchmark::State& state) {
  const BettiTable table = sample_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree_genus(table));
  }
}
BENCHMARK(BM_DegreeGenus);

void BM_ApplyPQ(benchmark::State& state) {
  const BettiTable table = sample_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_pq(table, 0, 1));
  }
}
BENCHMARK(BM_ApplyPQ);

void BM_LinkTable(benchmark::State& state) {
  const BettiTable table = sample_table();
  const CIType ci = make_ci(4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_table(table, ci));
  }
}
BENCHMARK(BM_LinkTable);

void BM_AnalyzeTable(benchmark::State& state) {
  const BettiTable table = sample_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_table_json(table, {}));
  }
}
BENCHMARK(BM_AnalyzeTable);

}  // namespace

BENCHMARK_MAIN();
