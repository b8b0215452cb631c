#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "regress/matrix.hpp"

namespace regress {

// Result of an ordinary least-squares fit with intercept. The intercept is
// stored apart from the feature coefficients; residuals are kept in sample
// order.
struct LinearFit {
    double intercept = 0.0;
    std::vector<double> coefficients;
    std::vector<std::string> feature_names;
    Vector residuals;
    std::size_t n_samples = 0;
    // Non-fatal notes attached by the fitting routine (e.g. conditioning).
    std::vector<std::string> warnings;
};

struct FitReport {
    double r_squared = 0.0;
    double mse = 0.0;
    double residual_max_abs = 0.0;
};

// Straight-line fit y ~ intercept + slope * x. Needs at least two samples
// and a non-constant x.
LinearFit fit_simple(const Vector& x, const Vector& y, const std::string& feature_name = "x");

// Multi-feature fit y ~ intercept + x * beta. The design is augmented with
// a leading ones column internally; x holds features only.
LinearFit fit_multiple(const Matrix& x, const Vector& y, const std::vector<std::string>& names);

// Fit against an explicit design matrix whose first column is the
// intercept. names labels the remaining columns. Shared by the linear and
// polynomial fits so both take the identical numeric path. When
// r_diag_spread is given it receives max|r_ii| / min|r_ii| of the
// triangular factor, a cheap conditioning estimate.
LinearFit fit_design(const Matrix& design, const Vector& y, const std::vector<std::string>& names,
                     double* r_diag_spread = nullptr);

// Predictions intercept + x * beta for a feature matrix with one column per
// coefficient.
Vector predict(const LinearFit& fit, const Matrix& x);

// R-squared, mean squared error and the largest absolute residual of a fit
// against its training target. A perfect fit on a constant target reports
// r_squared = 1; a non-perfect fit on a constant target has no defined
// r_squared and throws DegenerateTargetError.
FitReport diagnostics(const LinearFit& fit, const Vector& y);

}  // namespace regress
