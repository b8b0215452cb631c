#pragma once

#include <cstddef>

#include "regress/matrix.hpp"

namespace regress {

// frac is the fraction of samples in each local window; robust_iters is the
// number of bisquare reweighting passes over the residuals.
struct LowessConfig {
    double frac = 2.0 / 3.0;
    std::size_t robust_iters = 3;
};

struct LowessResult {
    Vector x_sorted;
    Vector y_smoothed;                // aligned with x_sorted
    Vector original_order_smoothed;   // aligned with the input order
    LowessConfig config;
};

// Tricube distance kernel (1 - |u|^3)^3 on |u| < 1, else 0.
double tricube(double u);

// Bisquare robustness weight (1 - u^2)^2 on |u| < 1, else 0.
double bisquare(double u);

// Locally weighted scatterplot smoothing: at every sample a tricube-weighted
// degree-1 regression over the k nearest neighbors, k = max(3, ceil(frac*n))
// clamped to n, evaluated at that sample. Windows are contiguous in sorted
// x and extend toward the nearer neighbor, preferring smaller x on ties.
// Each robust pass reweights by bisquare(residual / (6 median|residual|))
// and stops early when the median residual is zero. Ties in x sort stably
// by original index.
LowessResult smooth(const Vector& x, const Vector& y, const LowessConfig& cfg = {});

}  // namespace regress
