#include <benchmark/benchmark.h>

#include "specbound/canonical.hpp"
#include "specbound/enumeration.hpp"
#include "specbound/families.hpp"

namespace {

using namespace specbound;

void BM_EnumerateConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_connected(n, [&](const Graph&) { ++count; });
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CanonicalLabeling(benchmark::State& state) {
  const Graph g = make_family({FamilyKind::kneser, {static_cast<std::size_t>(state.range(0)), 2}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
  state.SetLabel("kneser n=" + std::to_string(g.order()));
}
BENCHMARK(BM_CanonicalLabeling)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = make_family({FamilyKind::kneser, {static_cast<std::size_t>(state.range(0)), 2}});
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->DenseRange(5, 11)->Unit(benchmark::kMicrosecond);

void BM_Survey(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(survey(n));
}
BENCHMARK(BM_Survey)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
