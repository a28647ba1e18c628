#include <benchmark/benchmark.h>

#include "nilzeta/conjbounds.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/symfunc.hpp"
#include "nilzeta/topology.hpp"

using namespace nilzeta;

namespace {

const char* const kGroups[] = {"S4", "A5", "ES32", "PSL(2,7)", "PSL(2,11)"};

void BM_Lattice(benchmark::State& state) {
  const FiniteGroup g = make_group(kGroups[state.range(0)]);
  const unsigned q = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(g, q).size());
  state.SetLabel(g.name());
}
BENCHMARK(BM_Lattice)->ArgsProduct({{0, 1, 2, 3, 4}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_Series(benchmark::State& state) {
  const FiniteGroup g = make_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(series_pq(g, 2).terms().size());
  state.SetLabel(g.name());
}
BENCHMARK(BM_Series)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CosetComplex(benchmark::State& state) {
  const FiniteGroup g = make_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_coset_complex(g, 2).simplex_count());
  state.SetLabel(g.name());
}
BENCHMARK(BM_CosetComplex)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const CosetComplex c = build_coset_complex(make_group(kGroups[state.range(0)]), 2);
  for (auto _ : state) benchmark::DoNotOptimize(homology(c).groups.size());
  state.SetLabel(c.poset().group().name());
}
BENCHMARK(BM_Homology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SmithSparseVsDense(benchmark::State& state) {
  const CosetComplex c = build_coset_complex(extraspecial32(), 2);
  const SparseIntMatrix m = boundary_matrix(c, 2);
  const bool dense = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize((dense ? smith_invariants_dense(m) : smith_invariants(m)).size());
  state.SetLabel(dense ? "dense" : "sparse");
}
BENCHMARK(BM_SmithSparseVsDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteHomCount(benchmark::State& state) {
  const FiniteGroup g = alternating(5);
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_hom_count(g, 2, 3, kDefaultTupleBudget, jobs));
}
BENCHMARK(BM_BruteHomCount)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_KCountRoutes(benchmark::State& state) {
  const FiniteGroup g = symmetric(4);
  const unsigned n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    switch (state.range(0)) {
      case 0: benchmark::DoNotOptimize(k_count(g, n)); break;
      case 1: benchmark::DoNotOptimize(k_count_mobius(g, n)); break;
      default: benchmark::DoNotOptimize(k_count_brute(g, n)); break;
    }
  }
}
BENCHMARK(BM_KCountRoutes)->ArgsProduct({{0, 1, 2}, {2, 4}})->Unit(benchmark::kMicrosecond);

void BM_SymmetricHomCount(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_count_symmetric(n, 3));
}
BENCHMARK(BM_SymmetricHomCount)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
