#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "regress/lowess.hpp"

namespace {

void BM_LowessSmooth(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto iters = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(3);
    std::normal_distribution<double> noise(0.0, 0.2);
    regress::Vector x = regress::Vector::zeros(n);
    regress::Vector y = regress::Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(i) / 10.0;
        y[i] = std::sin(x[i]) + noise(rng);
    }
    regress::LowessConfig cfg;
    cfg.frac = 0.3;
    cfg.robust_iters = iters;
    for (auto _ : state) {
        benchmark::DoNotOptimize(regress::smooth(x, y, cfg));
    }
}

}  // namespace

BENCHMARK(BM_LowessSmooth)->Args({100, 0})->Args({100, 3})->Args({1000, 3});
