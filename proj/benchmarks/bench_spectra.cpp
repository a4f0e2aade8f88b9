#include <benchmark/benchmark.h>

#include "specbound/bounds.hpp"
#include "specbound/families.hpp"
#include "specbound/spectra.hpp"

namespace {

using namespace specbound;

void BM_EigenvaluesHypercube(benchmark::State& state) {
  const Matrix a = adjacency_matrix(make_family({FamilyKind::hypercube, {static_cast<std::size_t>(state.range(0))}}));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(a));
  state.SetLabel("n=" + std::to_string(a.dim()));
}
BENCHMARK(BM_EigenvaluesHypercube)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_EigenvaluesCycle(benchmark::State& state) {
  const Matrix a = adjacency_matrix(make_family({FamilyKind::cycle, {static_cast<std::size_t>(state.range(0))}}));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(a));
}
BENCHMARK(BM_EigenvaluesCycle)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_ProductBoundPetersenCone(benchmark::State& state) {
  const Graph g = cone(make_family({FamilyKind::kneser, {5, 2}}));
  for (auto _ : state) benchmark::DoNotOptimize(product_bound_report(g));
}
BENCHMARK(BM_ProductBoundPetersenCone);

}  // namespace
