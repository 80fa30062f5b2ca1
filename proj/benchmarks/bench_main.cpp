#include "pairlab/pairlab.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pairlab;

namespace {

// Random supports in n variables, exponents <= 6.
WeightLP random_lp(std::size_t n, int terms, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> exp(0, 6);
    WeightLP lp{n, {}};
    while (static_cast<int>(lp.constraints.size()) < terms) {
        ExponentVector m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = exp(rng);
        if (!m.is_zero()) lp.constraints.push_back(m);
    }
    return lp;
}

void BM_WeightLP(benchmark::State& state) {
    std::mt19937 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto lp = random_lp(n, static_cast<int>(state.range(1)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(lp_minimize(lp));
}
BENCHMARK(BM_WeightLP)->Args({2, 8})->Args({3, 16})->Args({5, 32})->Args({8, 64});

void BM_NewtonBoundParsed(benchmark::State& state) {
    const SparsePoly f = parse_poly("x^5 + x^3*y^2 + x*y^4 + y^7 + z^9 + x*y*z^3", 3);
    for (auto _ : state) benchmark::DoNotOptimize(lct_newton_bound(f));
}
BENCHMARK(BM_NewtonBoundParsed);

void BM_YanoSpectrum(benchmark::State& state) {
    const auto m = state.range(0);
    const std::vector<Rational> w{Rational(1) / Rational(m), Rational(1) / Rational(m + 1),
                                  Rational(1) / Rational(m + 2)};
    for (auto _ : state) benchmark::DoNotOptimize(reduced_bpoly(yano_spectrum(w)));
}
BENCHMARK(BM_YanoSpectrum)->Arg(3)->Arg(6)->Arg(10);

void BM_EnumerateFn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational theta = max_fn_below_one(n - 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_fn_above(n, theta + Rational(1) / Rational(1000)));
}
BENCHMARK(BM_EnumerateFn)->Arg(2)->Arg(3);

void BM_PolyPow(benchmark::State& state) {
    const SparsePoly f = parse_poly("x + y^2 + z^3 + x*y*z", 3);
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f.pow(k));
}
BENCHMARK(BM_PolyPow)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
