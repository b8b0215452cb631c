#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace regress {

// Dense column of doubles. Entries are checked to be finite at
// construction; mutation through operator[] is reserved for algorithm
// internals that preserve finiteness.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<double> entries);
    Vector(std::initializer_list<double> entries);

    static Vector zeros(std::size_t n);
    static Vector ones(std::size_t n);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }

    const std::vector<double>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    double norm2() const;
    double norm_inf() const;
    double sum() const;
    double mean() const;

private:
    std::vector<double> entries_;
};

// Dense row-major matrix of doubles, finite-checked at construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return entries_; }

    Matrix transpose() const;
    Vector column(std::size_t j) const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

}  // namespace regress
