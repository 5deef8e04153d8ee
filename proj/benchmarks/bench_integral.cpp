#include <cmath>

#include <benchmark/benchmark.h>

#include "logint/integral.hpp"
#include "logint/quad.hpp"

namespace {

void BM_IntegrateFinite(benchmark::State& state) {
    const logint::quad::Integrand f = [](double x) { return std::log(x) / (1.0 + x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::quad::integrate_finite(f, 0.0, 1.0));
    }
}
BENCHMARK(BM_IntegrateFinite);

void BM_IntegrateSemiInfinite(benchmark::State& state) {
    const logint::quad::Integrand f = [](double x) { return std::exp(-x * x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::quad::integrate_semi_infinite(f, 0.0));
    }
}
BENCHMARK(BM_IntegrateSemiInfinite);

void BM_ClosedFormTrig(benchmark::State& state) {
    const logint::Exponent n(3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::closed_form_trig(n));
    }
}
BENCHMARK(BM_ClosedFormTrig);

void BM_ClosedFormTrigamma(benchmark::State& state) {
    const logint::Exponent n(3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::closed_form_trigamma(n));
    }
}
BENCHMARK(BM_ClosedFormTrigamma);

void BM_NumericIntegral(benchmark::State& state) {
    const logint::Exponent n(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::numeric_integral(n));
    }
}
BENCHMARK(BM_NumericIntegral)->Arg(2)->Arg(4)->Arg(100);

void BM_EvaluateAllRoutes(benchmark::State& state) {
    const logint::Exponent n(3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(logint::evaluate_all_routes(n));
    }
}
BENCHMARK(BM_EvaluateAllRoutes);

} // namespace
