#include <benchmark/benchmark.h>

#include "logint/specfun.hpp"

namespace {

void BM_Lgamma(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::specfun::lgamma(x));
        x = x < 50.0 ? x + 0.731 : 0.37;
    }
}
BENCHMARK(BM_Lgamma);

void BM_Digamma(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::specfun::digamma(x));
        x = x < 50.0 ? x + 0.731 : 0.37;
    }
}
BENCHMARK(BM_Digamma);

void BM_Trigamma(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::specfun::trigamma(x));
        x = x < 50.0 ? x + 0.731 : 0.37;
    }
}
BENCHMARK(BM_Trigamma);

void BM_Polygamma(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::specfun::polygamma(m, 0.3));
    }
}
BENCHMARK(BM_Polygamma)->Arg(1)->Arg(4)->Arg(12);

void BM_CotDerivative(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::specfun::cot_derivative(m, 0.7));
    }
}
BENCHMARK(BM_CotDerivative)->Arg(1)->Arg(6)->Arg(12);

} // namespace
