#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "regress/linear.hpp"
#include "regress/nonlinear.hpp"
#include "regress/polynomial.hpp"

namespace {

void BM_FitPolynomial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto degree = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> noise(-0.1, 0.1);
    regress::Vector x = regress::Vector::zeros(n);
    regress::Vector y = regress::Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(i) / static_cast<double>(n);
        y[i] = 1.0 + 2.0 * x[i] - 3.0 * x[i] * x[i] + noise(rng);
    }
    const regress::PolynomialSpec spec(degree);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regress::fit_polynomial(x, y, spec));
    }
}

void BM_LevenbergMarquardtExponential(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> noise(-0.02, 0.02);
    regress::Vector x = regress::Vector::zeros(n);
    regress::Vector y = regress::Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = 4.0 * static_cast<double>(i) / static_cast<double>(n);
        y[i] = 2.0 * std::exp(0.5 * x[i]) + 1.0 + noise(rng);
    }
    const regress::ParameterizedModel model = regress::exponential_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            regress::levenberg_marquardt(model, x, y, regress::Vector{1, 1, 1}));
    }
}

}  // namespace

BENCHMARK(BM_FitPolynomial)->Args({100, 3})->Args({1000, 5});
BENCHMARK(BM_LevenbergMarquardtExponential)->Arg(100)->Arg(1000);
