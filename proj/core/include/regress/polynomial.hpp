#pragma once

#include <cstddef>

#include "regress/linear.hpp"
#include "regress/matrix.hpp"

namespace regress {

// Degree of the monomial basis 1, x, ..., x^degree. Degrees above 30 are
// rejected: raw double-precision monomials carry no information beyond that.
struct PolynomialSpec {
    static constexpr std::size_t kMaxDegree = 30;

    explicit PolynomialSpec(std::size_t degree);

    std::size_t degree() const { return degree_; }

private:
    std::size_t degree_;
};

// n_samples x (degree + 1) design whose row i is (1, x_i, x_i^2, ...).
Matrix expand(const Vector& x, const PolynomialSpec& spec);

// Least-squares fit of a univariate polynomial. The constant term is the
// intercept; coefficients are named "x^1" .. "x^degree". A fit whose
// triangular factor has a diagonal spread above 1e8 gets a conditioning
// warning attached.
LinearFit fit_polynomial(const Vector& x, const Vector& y, const PolynomialSpec& spec);

}  // namespace regress
