#include <benchmark/benchmark.h>

#include "modeq/grid.hpp"
#include "modeq/symbolic/proofs.hpp"

using namespace modeq;

namespace {

void run_catalog(benchmark::State& state, bool parallel) {
  const Precision prec = Precision::from_digits(static_cast<int>(state.range(0)));
  const ArbReal tol = default_tolerance(prec);
  const auto ids = all_identities();
  const auto grid = default_grid();
  for (auto _ : state) {
    auto reports = parallel ? verify_catalog(ids, grid, prec, tol) : verify_catalog_serial(ids, grid, prec, tol);
    benchmark::DoNotOptimize(reports);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ids.size() * grid.size()));
}

void BM_CatalogSerial(benchmark::State& state) { run_catalog(state, false); }
void BM_CatalogOpenMP(benchmark::State& state) { run_catalog(state, true); }

void BM_ProveAll(benchmark::State& state) {
  const Precision prec = Precision::from_digits(100);
  for (auto _ : state) {
    for (const auto& step : symbolic::proof_steps()) benchmark::DoNotOptimize(symbolic::run_step(step, prec));
  }
}

}  // namespace

BENCHMARK(BM_CatalogSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CatalogOpenMP)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProveAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
