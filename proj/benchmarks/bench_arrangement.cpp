#include <benchmark/benchmark.h>

#include "outerstring/arrangement.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/crossing_level.hpp"
#include "outerstring/minor_witness.hpp"

using namespace outerstring;

static void BM_BuildFolk(benchmark::State& state) {
  const auto inst = lowerbound_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Arrangement::build(inst).face_count());
  state.counters["strings"] = static_cast<double>(inst.size());
}
BENCHMARK(BM_BuildFolk)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_ExactLevelsRandom(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)), 3, 17);
  const auto arr = Arrangement::build(inst);
  for (auto _ : state) benchmark::DoNotOptimize(crossing_levels_exact(arr));
  state.counters["faces"] = arr.face_count();
}
BENCHMARK(BM_ExactLevelsRandom)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_RemovalOracle(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)), 2, 5);
  const auto arr = Arrangement::build(inst);
  for (auto _ : state) benchmark::DoNotOptimize(crossing_levels_by_removal(arr));
}
BENCHMARK(BM_RemovalOracle)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_WitnessPoint(benchmark::State& state) {
  const auto fam = circular_family(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_point(fam).level);
}
BENCHMARK(BM_WitnessPoint)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
