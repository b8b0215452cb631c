#include "regress/linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "regress/errors.hpp"
#include "regress/qr.hpp"

namespace regress {

LinearFit fit_design(const Matrix& design, const Vector& y,
                     const std::vector<std::string>& names, double* r_diag_spread) {
    const std::size_t m = design.rows();
    const std::size_t n = design.cols();
    if (y.size() != m) throw ShapeError("fit_design: target length != design rows");
    if (names.size() + 1 != n) throw ShapeError("fit_design: need one name per feature column");
    if (m < n) {
        throw UnderDeterminedError("fit_design: " + std::to_string(m) + " samples for " +
                                   std::to_string(n) + " parameters");
    }

    const QrFactors qr = qr_decompose(design);
    if (r_diag_spread != nullptr) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::fabs(qr.r(i, i));
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        *r_diag_spread = lo == 0.0 ? std::numeric_limits<double>::infinity() : hi / lo;
    }
    Vector beta = solve_from_factors(qr, y);

    LinearFit fit;
    fit.intercept = beta[0];
    fit.coefficients.assign(beta.entries().begin() + 1, beta.entries().end());
    fit.feature_names = names;
    fit.n_samples = m;
    Vector fitted = design * beta;
    Vector resid = Vector::zeros(m);
    for (std::size_t i = 0; i < m; ++i) resid[i] = y[i] - fitted[i];
    fit.residuals = std::move(resid);
    return fit;
}

LinearFit fit_simple(const Vector& x, const Vector& y, const std::string& feature_name) {
    if (x.size() != y.size()) throw ShapeError("fit_simple: x and y lengths differ");
    if (x.size() < 2) throw UnderDeterminedError("fit_simple: need at least 2 samples");
    Matrix design(x.size(), 2);
    for (std::size_t i = 0; i < x.size(); ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = x[i];
    }
    return fit_design(design, y, {feature_name});
}

LinearFit fit_multiple(const Matrix& x, const Vector& y, const std::vector<std::string>& names) {
    if (names.size() != x.cols()) throw ShapeError("fit_multiple: one name per feature column");
    if (y.size() != x.rows()) throw ShapeError("fit_multiple: target length != feature rows");
    if (x.rows() < x.cols() + 1) {
        throw UnderDeterminedError("fit_multiple: " + std::to_string(x.rows()) +
                                   " samples for " + std::to_string(x.cols() + 1) +
                                   " parameters");
    }
    Matrix design(x.rows(), x.cols() + 1);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < x.cols(); ++j) design(i, j + 1) = x(i, j);
    }
    return fit_design(design, y, names);
}

Vector predict(const LinearFit& fit, const Matrix& x) {
    if (x.cols() != fit.coefficients.size()) {
        throw ShapeError("predict: " + std::to_string(x.cols()) + " feature columns for " +
                         std::to_string(fit.coefficients.size()) + " coefficients");
    }
    Vector yhat = Vector::zeros(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        double s = fit.intercept;
        for (std::size_t j = 0; j < x.cols(); ++j) s += fit.coefficients[j] * x(i, j);
        yhat[i] = s;
    }
    return yhat;
}

FitReport diagnostics(const LinearFit& fit, const Vector& y) {
    const std::size_t n = y.size();
    if (n != fit.n_samples) throw ShapeError("diagnostics: target length != fit samples");
    if (fit.residuals.size() != n) throw ShapeError("diagnostics: residual length != samples");

    const double ybar = y.mean();
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss_tot += (y[i] - ybar) * (y[i] - ybar);
    double ss_res = 0.0;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ss_res += fit.residuals[i] * fit.residuals[i];
        max_abs = std::max(max_abs, std::fabs(fit.residuals[i]));
    }

    FitReport report;
    report.mse = ss_res / static_cast<double>(n);
    report.residual_max_abs = max_abs;

    const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
    const bool constant_target = (ss_tot == 0.0) || (*ymin == *ymax);
    if (constant_target) {
        // Perfect within rounding of the solve counts as perfect; anything
        // else leaves r-squared undefined.
        const double tol = 1e-12 * std::max(1.0, std::fabs(y.empty() ? 0.0 : y[0]));
        if (max_abs <= tol) {
            report.r_squared = 1.0;
            return report;
        }
        throw DegenerateTargetError("diagnostics: constant target with non-zero residuals");
    }
    report.r_squared = 1.0 - ss_res / ss_tot;
    return report;
}

}  // namespace regress
