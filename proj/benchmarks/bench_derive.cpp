#include <benchmark/benchmark.h>

#include "lsym/derive.hpp"
#include "lsym/period.hpp"

namespace {

void BM_Derive(benchmark::State& state) {
    const auto goal = lsym::all_goals()[static_cast<std::size_t>(state.range(0))];
    lsym::DeriveParams p;
    p.n = static_cast<int>(state.range(1));
    p.m = 1;
    p.d = 2;
    for (auto _ : state) benchmark::DoNotOptimize(lsym::derive(goal, p).exponent);
    state.SetLabel(lsym::to_string(goal));
}
BENCHMARK(BM_Derive)->ArgsProduct({benchmark::CreateDenseRange(0, 8, 1), {4, 8}})->Unit(benchmark::kMicrosecond);

void BM_CycleDescents(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto cycles = lsym::CycleDatum::all_cycles(n);
    for (auto _ : state) {
        long total = 0;
        for (const auto& c : cycles)
            for (int i = 1; i <= n; ++i) total += lsym::count_descents(c, i);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_CycleDescents)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

}  // namespace
