#include <benchmark/benchmark.h>

#include "fibwalk/core.hpp"
#include "fibwalk/density.hpp"
#include "fibwalk/exact.hpp"
#include "fibwalk/gaps.hpp"
#include "fibwalk/reverse.hpp"

namespace {

using u64 = std::uint64_t;

void BM_characterize(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fibwalk::core::characterize(n));
}
BENCHMARK(BM_characterize)->Arg(100)->Arg(100'000)->Arg(1'000'000'000)
    ->Arg(1'000'000'000'000'000'000LL);

void BM_reverse_walk(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    const u64 b = fibwalk::exact::floor_phi_u64(n) - n;  // near 1/phi of n
    for (auto _ : state)
        benchmark::DoNotOptimize(fibwalk::reverse::reverse_walk(n, b));
}
BENCHMARK(BM_reverse_walk)->Arg(100)->Arg(1'000'000)->Arg(1'000'000'000'000LL);

void BM_floor_phi_u64(benchmark::State& state) {
    u64 n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fibwalk::exact::floor_phi_u64(n));
        n = n % 1'000'000'007 + 1;
    }
}
BENCHMARK(BM_floor_phi_u64);

void BM_delta_exact(benchmark::State& state) {
    u64 n = 12345;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fibwalk::core::delta(n));
        n = n % 1'000'000'007 + 1;
    }
}
BENCHMARK(BM_delta_exact);

void BM_density_scan(benchmark::State& state) {
    const u64 limit = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        auto s = fibwalk::density::empirical_scan(limit, fibwalk::density::SeriesKind::D,
                                                  {limit});
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(limit));
}
BENCHMARK(BM_density_scan)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_gap_stream(benchmark::State& state) {
    for (auto _ : state) {
        auto gs = fibwalk::gaps::gap_set(fibwalk::core::Kind::Down, 2,
                                         static_cast<u64>(state.range(0)));
        benchmark::DoNotOptimize(gs);
    }
}
BENCHMARK(BM_gap_stream)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
