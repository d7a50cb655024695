#include <benchmark/benchmark.h>

#include "lsym/cyclotomic.hpp"
#include "lsym/euler.hpp"
#include "lsym/laurent.hpp"
#include "lsym/rational.hpp"

namespace {

void BM_RationalSum(benchmark::State& state) {
    for (auto _ : state) {
        lsym::BigRational total;
        for (long long k = 1; k <= state.range(0); ++k) total += lsym::BigRational(1, k);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_RationalSum)->Arg(50)->Arg(400);

void BM_CyclotomicPower(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    lsym::Cyclotomic z = lsym::Cyclotomic::zeta(order);
    z += lsym::Cyclotomic(1);
    for (auto _ : state) {
        lsym::Cyclotomic acc(1);
        for (int k = 0; k < 16; ++k) acc *= z;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CyclotomicPower)->Arg(5)->Arg(12)->Arg(60);

void BM_EulerFactorTensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    lsym::Multiset a, b;
    for (int i = 0; i < n; ++i) {
        a.push_back(lsym::LaurentPoly(lsym::Symbol::eigenvalue(i + 1)));
        b.push_back(lsym::LaurentPoly(lsym::Symbol::named("b" + std::to_string(i + 1))));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(lsym::euler_from_eigenvalues(lsym::tensor_eigenvalues(a, b), 1).canonical());
}
BENCHMARK(BM_EulerFactorTensor)->DenseRange(2, 4);

}  // namespace
