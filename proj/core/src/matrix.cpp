#include "regress/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "regress/errors.hpp"

namespace regress {

namespace {

void check_finite(const std::vector<double>& entries, const char* what) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i])) {
            throw NonFiniteError(std::string(what) + ": non-finite entry at index " +
                                 std::to_string(i));
        }
    }
}

}  // namespace

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
    check_finite(entries_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
    check_finite(entries_, "Vector");
}

Vector Vector::zeros(std::size_t n) {
    Vector v;
    v.entries_.assign(n, 0.0);
    return v;
}

Vector Vector::ones(std::size_t n) {
    Vector v;
    v.entries_.assign(n, 1.0);
    return v;
}

double Vector::norm2() const {
    double s = 0.0;
    for (double e : entries_) s += e * e;
    return std::sqrt(s);
}

double Vector::norm_inf() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::fabs(e));
    return m;
}

double Vector::sum() const {
    double s = 0.0;
    for (double e : entries_) s += e;
    return s;
}

double Vector::mean() const {
    if (entries_.empty()) throw ShapeError("Vector::mean: empty vector");
    return sum() / static_cast<double>(entries_.size());
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ShapeError("Matrix: " + std::to_string(entries_.size()) + " entries for " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    check_finite(entries_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::column(std::size_t j) const {
    if (j >= cols_) throw ShapeError("Matrix::column: index out of range");
    Vector v = Vector::zeros(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::fabs(e));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("Matrix multiply: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw ShapeError("Matrix-vector multiply: dimensions differ");
    Vector y = Vector::zeros(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

}  // namespace regress
