// Serial reference vs chunked OpenMP record scan, and the bound check.

#include <benchmark/benchmark.h>

#include "runbits/records.hpp"

using namespace runbits;

static void BM_ScanSerial(benchmark::State& state) {
    ScanConfig cfg{append_spec("0", "1"), static_cast<std::uint64_t>(state.range(0)), 4096};
    for (auto _ : state) benchmark::DoNotOptimize(scan_records_serial(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanSerial)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

static void BM_ScanParallel(benchmark::State& state) {
    ScanConfig cfg{append_spec("0", "1"), static_cast<std::uint64_t>(state.range(0)),
                   static_cast<std::uint64_t>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(scan_records(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanParallel)
    ->Args({1 << 14, 4096})
    ->Args({1 << 17, 64})
    ->Args({1 << 17, 4096})
    ->Unit(benchmark::kMillisecond);

static void BM_BoundSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_bound_serial(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BoundSerial)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

static void BM_BoundParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_bound(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BoundParallel)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
