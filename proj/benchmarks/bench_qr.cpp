#include <benchmark/benchmark.h>

#include <random>

#include "regress/qr.hpp"

namespace {

regress::Matrix random_matrix(std::size_t m, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    regress::Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    return a;
}

void BM_QrDecompose(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const regress::Matrix a = random_matrix(m, n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regress::qr_decompose(a));
    }
}

void BM_SolveLeastSquares(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const regress::Matrix a = random_matrix(m, n, 43);
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    regress::Vector b = regress::Vector::zeros(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regress::solve_least_squares(a, b));
    }
}

}  // namespace

BENCHMARK(BM_QrDecompose)->Args({64, 4})->Args({256, 8})->Args({1024, 16});
BENCHMARK(BM_SolveLeastSquares)->Args({64, 4})->Args({256, 8})->Args({1024, 16});
