#include <benchmark/benchmark.h>

#include "knotoid/knotoid.hpp"

using namespace knotoid;

static void BM_ComputeH(benchmark::State& state) {
  const GaussDiagram d = random_diagram(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_H(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeH)->RangeMultiplier(2)->Range(8, 1024)->Complexity(benchmark::oNSquared);

static void BM_Degrees(benchmark::State& state) {
  const GaussDiagram d = random_diagram(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(degrees(d));
}
BENCHMARK(BM_Degrees)->Arg(64)->Arg(1024);

static void BM_Parse(benchmark::State& state) {
  const std::string code = serialize(random_diagram(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(parse_gauss_code(code));
}
BENCHMARK(BM_Parse)->Arg(64)->Arg(1024);

static void BM_SingularH(benchmark::State& state) {
  const GaussDiagram base = random_diagram(12, 4);
  std::vector<ChordId> ids;
  for (ChordId i = 1; i <= static_cast<ChordId>(state.range(0)); ++i) ids.push_back(i);
  const GaussDiagram d = make_singular(base, ids);
  for (auto _ : state) benchmark::DoNotOptimize(singular_H(d, ReductionPolicy::Quotient));
}
BENCHMARK(BM_SingularH)->DenseRange(1, 4);

static void BM_RandomWalk(benchmark::State& state) {
  const GaussDiagram d = random_diagram(8, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_walk(d, 10, ++seed, all_move_kinds()));
}
BENCHMARK(BM_RandomWalk);

static void BM_GordianBound(benchmark::State& state) {
  const GaussDiagram d = random_diagram(static_cast<std::size_t>(state.range(0)), 6);
  const GaussDiagram e = crossing_change(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gordian_lower_bound(d, e));
}
BENCHMARK(BM_GordianBound)->Arg(16)->Arg(256);
BENCHMARK_MAIN();
