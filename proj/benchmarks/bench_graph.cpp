#include <benchmark/benchmark.h>

#include "outerstring/construct.hpp"
#include "outerstring/graph.hpp"
#include "outerstring/minor.hpp"
#include "outerstring/solvers.hpp"
#include "outerstring/sparsity.hpp"
#include "outerstring/treewidth.hpp"

using namespace outerstring;

static void BM_Arboricity(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(arboricity(g));
}
BENCHMARK(BM_Arboricity)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TreewidthExact(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g).tw);
}
BENCHMARK(BM_TreewidthExact)->Arg(12)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_CliqueMinor(benchmark::State& state) {
  const auto g = intersection_graph(lowerbound_instance(3));
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_clique_minor(g, h).has_value());
}
BENCHMARK(BM_CliqueMinor)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SolveTd(benchmark::State& state) {
  const auto p = static_cast<Problem>(state.range(0));
  const auto g = intersection_graph(random_instance(30, 2, 11));
  ProblemOptions opts;
  opts.lists.assign(static_cast<std::size_t>(g.vertex_count()), {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(solve(p, g, opts).value());
  state.SetLabel(to_string(p));
}
BENCHMARK(BM_SolveTd)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

static void BM_VertexCoverBranch(benchmark::State& state) {
  const auto g = random_graph(40, 0.08, 13);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vc_branch(g, k).feasible());
}
BENCHMARK(BM_VertexCoverBranch)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);
