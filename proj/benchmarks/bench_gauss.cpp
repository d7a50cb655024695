#include <benchmark/benchmark.h>

#include "lsym/gauss.hpp"

namespace {

void BM_GaussSum(benchmark::State& state) {
    const auto chi = lsym::DirichletChar::kronecker(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsym::gauss_sum(chi).re);
}
BENCHMARK(BM_GaussSum)->Arg(-7)->Arg(-47)->Arg(-199)->Unit(benchmark::kMicrosecond);

void BM_CharacterGroup(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lsym::DirichletChar::all(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_CharacterGroup)->Arg(12)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_DirichletL(benchmark::State& state) {
    const auto chi = lsym::DirichletChar::kronecker(static_cast<int>(state.range(0)));
    const lsym::Real tol("1e-9");
    for (auto _ : state) benchmark::DoNotOptimize(lsym::dirichlet_L(chi, lsym::Real(1), tol).re);
}
BENCHMARK(BM_DirichletL)->Arg(-4)->Arg(-23)->Unit(benchmark::kMillisecond);

}  // namespace
