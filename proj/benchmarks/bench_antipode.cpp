#include <benchmark/benchmark.h>

#include "hopf/graph_algebra.hpp"
#include "hopf/mqsym.hpp"
#include "hopf/nsym.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"

using namespace hopf;

namespace {

// A fresh evaluator per iteration, so memo tables do not carry over.

void BM_QSymFundamental(benchmark::State& state) {
  QSymFundamental h;
  const int n = static_cast<int>(state.range(0));
  const auto keys = compositions_of(n);
  for (auto _ : state) {
    TakeuchiEvaluator<QSymFundamental> ev(h);
    for (const auto& a : keys) benchmark::DoNotOptimize(ev.antipode(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(keys.size()));
}
BENCHMARK(BM_QSymFundamental)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MQSym(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MQSym h(static_cast<std::size_t>(n) + 2);
  const auto keys = compositions_of(n);
  for (auto _ : state) {
    TakeuchiEvaluator<MQSym> ev(h);
    for (const auto& a : keys) benchmark::DoNotOptimize(ev.antipode(a));
  }
}
BENCHMARK(BM_MQSym)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Graph(benchmark::State& state) {
  GraphAlgebra h;
  const auto g = canonical_form(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    TakeuchiEvaluator<GraphAlgebra> ev(h);
    benchmark::DoNotOptimize(ev.antipode(g));
  }
}
BENCHMARK(BM_Graph)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GraphClosedForm(benchmark::State& state) {
  GraphAlgebra h;
  const auto g = canonical_form(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(h.antipode_closed(g));
}
BENCHMARK(BM_GraphClosedForm)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NSymImmaculate(benchmark::State& state) {
  NSymH h;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TakeuchiEvaluator<NSymH> ev(h);
    benchmark::DoNotOptimize(nsym_antipode_immaculate(ev, Composition{n, n}));
  }
}
BENCHMARK(BM_NSymImmaculate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SSymIdentity(benchmark::State& state) {
  SSym h;
  const int n = static_cast<int>(state.range(0));
  const Permutation p(eta(1, n).letters());
  for (auto _ : state) {
    TakeuchiEvaluator<SSym> ev(h);
    benchmark::DoNotOptimize(ev.antipode(p));
  }
}
BENCHMARK(BM_SSymIdentity)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SSymAllOfSize(benchmark::State& state) {
  SSym h;
  const auto perms = permutations_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    TakeuchiEvaluator<SSym> ev(h);
    for (const auto& p : perms) benchmark::DoNotOptimize(ev.antipode(p));
  }
}
BENCHMARK(BM_SSymAllOfSize)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
