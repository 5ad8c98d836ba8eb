#include <benchmark/benchmark.h>

#include "minusdom/cotree.hpp"
#include "minusdom/degenerate_fpt.hpp"
#include "minusdom/dh.hpp"
#include "minusdom/generators.hpp"
#include "minusdom/oracle.hpp"
#include "minusdom/reductions.hpp"
#include "minusdom/strongly_chordal.hpp"

using namespace minusdom;

namespace {

void BM_OracleGadgetL(benchmark::State& state) {
  Graph g = gadget_L().graph;
  for (auto _ : state) {
    auto res = exact_gamma_minus(g);
    benchmark::DoNotOptimize(res.optimum);
  }
}
BENCHMARK(BM_OracleGadgetL)->Unit(benchmark::kMillisecond);

void BM_Cotree(benchmark::State& state) {
  Graph g = random_cograph(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    auto res = gamma_minus_cograph(g);
    benchmark::DoNotOptimize(res.gamma_minus);
  }
}
BENCHMARK(BM_Cotree)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_DistanceHereditary(benchmark::State& state) {
  Graph g = random_dh(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    auto res = gamma_minus_dh(g);
    benchmark::DoNotOptimize(res.gamma_minus);
  }
}
BENCHMARK(BM_DistanceHereditary)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_StronglyChordalLP(benchmark::State& state) {
  Graph g = random_interval(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    auto res = gamma_minus_strongly_chordal(g);
    benchmark::DoNotOptimize(res.gamma_minus);
  }
}
BENCHMARK(BM_StronglyChordalLP)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SearchTree(benchmark::State& state) {
  Graph g = random_d_degenerate(static_cast<int>(state.range(0)), 2, 11);
  std::vector<int> black(g.n());
  for (int v = 0; v < g.n(); ++v) black[v] = v;
  for (auto _ : state) {
    auto res = solve_bw_fpt(g, black, 3);
    benchmark::DoNotOptimize(res.weight);
  }
}
BENCHMARK(BM_SearchTree)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
