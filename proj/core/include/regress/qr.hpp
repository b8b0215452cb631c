#pragma once

#include <cstddef>

#include "regress/matrix.hpp"

namespace regress {

// Thin QR factorization of an m x n matrix (m >= n): q has orthonormal
// columns (m x n), r is upper triangular (n x n) with non-negative diagonal.
// Entries of r below the diagonal are exact zeros.
struct QrFactors {
    Matrix q;
    Matrix r;
};

// Householder QR with the reflection signs flipped so that the diagonal of
// r is non-negative, which makes the factorization deterministic.
QrFactors qr_decompose(const Matrix& a);

// Number of diagonal entries of an upper-triangular matrix above
// tol * max |r_jj|.
std::size_t estimate_rank(const Matrix& r, double tol = 1e-12);

// Back-substitution for r x = qt_b, r upper triangular with nonzero diagonal.
Vector solve_upper_triangular(const Matrix& r, const Vector& qt_b);

// Minimizer of ||a x - b||_2 for an already computed factorization.
// Throws RankDeficientError when the estimated rank is below a.cols.
Vector solve_from_factors(const QrFactors& qr, const Vector& b, double rank_tol = 1e-12);

// Minimizer of ||a x - b||_2 via Householder QR. Requires a.rows >= a.cols
// and b.size == a.rows; throws RankDeficientError if a is not full column
// rank.
Vector solve_least_squares(const Matrix& a, const Vector& b);

}  // namespace regress
