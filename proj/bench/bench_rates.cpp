// Serial reference vs OpenMP drivers on the same workloads.

#include <benchmark/benchmark.h>

#include "gbs/experiments.hpp"

using namespace gbs::experiments;

namespace {

const RateGrid kGrid{7, 20, 5, 11, 1000, 1, false};
const SampleConfig kMcs{20, 10, 10000, 1};
const SampleConfig kDetector{12, 6, 2000, 1};

template <auto Driver>
void rates(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(Driver(kGrid));
    state.SetItemsProcessed(state.iterations() * 14 * 7 * kGrid.trials);
}

template <auto Driver>
void mcs_rates(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(Driver(kMcs, 10));
    state.SetItemsProcessed(state.iterations() * kMcs.trials);
}

template <auto Driver>
void detector_rates(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(Driver(kDetector));
    state.SetItemsProcessed(state.iterations() * kDetector.trials);
}

}  // namespace

BENCHMARK(rates<rate_comparison_serial>)->Name("rate_comparison/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(rates<rate_comparison>)->Name("rate_comparison/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(mcs_rates<per_mcs_rates_serial>)->Name("per_mcs_rates/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(mcs_rates<per_mcs_rates>)->Name("per_mcs_rates/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(detector_rates<per_single_detector_rates_serial>)
    ->Name("per_detector_rates/serial")
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(detector_rates<per_single_detector_rates>)
    ->Name("per_detector_rates/omp")
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
