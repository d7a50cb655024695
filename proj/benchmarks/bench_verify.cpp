#include <benchmark/benchmark.h>

#include "lsym/induction.hpp"
#include "lsym/satake.hpp"

namespace {

void BM_Lemma32Irreducible(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto kind = state.range(1) ? lsym::PlaceKind::Inert : lsym::PlaceKind::Split;
    for (auto _ : state) benchmark::DoNotOptimize(lsym::verify_lemma32({n}, kind).equal);
}
BENCHMARK(BM_Lemma32Irreducible)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Lemma32Isobaric(benchmark::State& state) {
    const auto kind = state.range(0) ? lsym::PlaceKind::Inert : lsym::PlaceKind::Split;
    for (auto _ : state) benchmark::DoNotOptimize(lsym::verify_lemma32({2, 1, 2}, kind).equal);
}
BENCHMARK(BM_Lemma32Isobaric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Prop34(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    const auto action = static_cast<lsym::ConjAction>(state.range(2));
    lsym::InducedDatum d{n, m, n / m, action, 1};
    for (auto _ : state) benchmark::DoNotOptimize(lsym::verify_prop34(d).equal);
}
BENCHMARK(BM_Prop34)
    ->Args({4, 2, static_cast<int>(lsym::ConjAction::SplitV)})
    ->Args({4, 2, static_cast<int>(lsym::ConjAction::InertHalfSwap)})
    ->Args({5, 5, static_cast<int>(lsym::ConjAction::InertAllFixed)})
    ->Args({6, 2, static_cast<int>(lsym::ConjAction::InertHalfSwap)})
    ->Unit(benchmark::kMillisecond);

}  // namespace
