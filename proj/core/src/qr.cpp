#include "regress/qr.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "regress/errors.hpp"

namespace regress {

QrFactors qr_decompose(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n) {
        throw ShapeError("qr_decompose: " + std::to_string(m) + " rows < " + std::to_string(n) +
                         " cols");
    }

    Matrix work = a;
    // Householder vectors, one per column, stored with their beta = 2/(v'v).
    std::vector<std::vector<double>> vs(n);
    std::vector<double> betas(n, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < m; ++i) norm += work(i, j) * work(i, j);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;  // zero pivot column, rank deficiency shows up in r

        std::vector<double> v(m - j);
        for (std::size_t i = j; i < m; ++i) v[i - j] = work(i, j);
        const double alpha = v[0] >= 0.0 ? norm : -norm;
        v[0] += alpha;
        double vtv = 0.0;
        for (double e : v) vtv += e * e;
        if (vtv == 0.0) continue;
        const double beta = 2.0 / vtv;

        for (std::size_t k = j; k < n; ++k) {
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += v[i - j] * work(i, k);
            dot *= beta;
            for (std::size_t i = j; i < m; ++i) work(i, k) -= dot * v[i - j];
        }
        work(j, j) = -alpha;  // computed exactly; the loop above leaves roundoff here
        vs[j] = std::move(v);
        betas[j] = beta;
    }

    // Accumulate thin q by applying the reflectors to the first n columns
    // of the identity, in reverse order.
    Matrix q(m, n);
    for (std::size_t j = 0; j < n; ++j) q(j, j) = 1.0;
    for (std::size_t j = n; j-- > 0;) {
        if (betas[j] == 0.0) continue;
        const std::vector<double>& v = vs[j];
        for (std::size_t k = 0; k < n; ++k) {
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += v[i - j] * q(i, k);
            dot *= betas[j];
            for (std::size_t i = j; i < m; ++i) q(i, k) -= dot * v[i - j];
        }
    }

    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = work(i, j);

    // Sign convention: non-negative diagonal of r.
    for (std::size_t i = 0; i < n; ++i) {
        if (r(i, i) < 0.0) {
            for (std::size_t j = i; j < n; ++j) r(i, j) = -r(i, j);
            for (std::size_t k = 0; k < m; ++k) q(k, i) = -q(k, i);
        }
    }
    return QrFactors{std::move(q), std::move(r)};
}

std::size_t estimate_rank(const Matrix& r, double tol) {
    const std::size_t n = std::min(r.rows(), r.cols());
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(r(i, i)));
    if (max_diag == 0.0) return 0;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(r(i, i)) > tol * max_diag) ++rank;
    return rank;
}

Vector solve_upper_triangular(const Matrix& r, const Vector& qt_b) {
    const std::size_t n = r.cols();
    if (r.rows() != n || qt_b.size() != n) {
        throw ShapeError("solve_upper_triangular: dimension mismatch");
    }
    Vector x = Vector::zeros(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = qt_b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= r(ii, j) * x[j];
        x[ii] = s / r(ii, ii);
    }
    return x;
}

Vector solve_from_factors(const QrFactors& qr, const Vector& b, double rank_tol) {
    const std::size_t m = qr.q.rows();
    const std::size_t n = qr.q.cols();
    if (b.size() != m) throw ShapeError("solve_from_factors: b length != rows");
    const std::size_t rank = estimate_rank(qr.r, rank_tol);
    if (rank < n) {
        throw RankDeficientError("solve_from_factors: estimated rank " + std::to_string(rank) +
                                 " < " + std::to_string(n) + " columns");
    }
    Vector qt_b = Vector::zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += qr.q(i, j) * b[i];
        qt_b[j] = s;
    }
    return solve_upper_triangular(qr.r, qt_b);
}

Vector solve_least_squares(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw ShapeError("solve_least_squares: b length != rows");
    return solve_from_factors(qr_decompose(a), b);
}

}  // namespace regress
