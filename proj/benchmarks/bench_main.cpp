#include <benchmark/benchmark.h>

#include "addbase/basis.hpp"
#include "addbase/census.hpp"
#include "addbase/essentia.hpp"
#include "addbase/oracle.hpp"

namespace {

using addbase::Int;
using addbase::PeriodicSet;

PeriodicSet product_family(int k) {
  static constexpr Int primes[] = {2, 3, 5, 7, 11, 13};
  Int m = 1;
  for (int i = 0; i < k; ++i) m *= primes[i];
  std::vector<Int> e;
  for (int i = 0; i < k; ++i) e.push_back(m / primes[i]);
  return addbase::canonicalize({e, m, {0}, 0});
}

void BM_Canonicalize(benchmark::State& state) {
  const Int m = state.range(0);
  std::vector<Int> residues;
  for (Int r = 0; r < m; r += 3) residues.push_back(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(addbase::canonicalize({{1, 2, 4, 8}, m, residues, m}));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(60)->Arg(360)->Arg(2520);

void BM_Order(benchmark::State& state) {
  const auto s = product_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(addbase::order(s));
}
BENCHMARK(BM_Order)->DenseRange(2, 5);

void BM_EssentialSubsets(benchmark::State& state) {
  const auto s = product_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(addbase::essential_subsets(s));
}
BENCHMARK(BM_EssentialSubsets)->DenseRange(2, 6);

void BM_BruteEssentialSubsets(benchmark::State& state) {
  const auto s = product_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(addbase::brute_essential_subsets(s, s.exceptional()));
}
BENCHMARK(BM_BruteEssentialSubsets)->DenseRange(2, 6);

void BM_SumsetLadder(benchmark::State& state) {
  const Int m = state.range(0);
  const auto s = addbase::canonicalize({{1, 5}, m, {0}, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(addbase::sumset_ladder(s, 5, 50 * m, 80 * m));
  }
  state.SetItemsProcessed(state.iterations() * 30 * m);
}
BENCHMARK(BM_SumsetLadder)->Arg(6)->Arg(60)->Arg(360)->Unit(benchmark::kMillisecond);

void BM_CensusTrial(benchmark::State& state) {
  addbase::CensusConfig config;
  std::uint64_t t = 0;
  for (auto _ : state) {
    addbase::CensusReport report;
    addbase::census_check(config, t, addbase::random_basis(config, t), report);
    ++t;
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CensusTrial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
