#include "regress/polynomial.hpp"

#include <string>
#include <vector>

#include "regress/errors.hpp"

namespace regress {

PolynomialSpec::PolynomialSpec(std::size_t degree) : degree_(degree) {
    if (degree > kMaxDegree) {
        throw DegreeTooLargeError("PolynomialSpec: degree " + std::to_string(degree) +
                                  " exceeds cap of " + std::to_string(kMaxDegree));
    }
}

Matrix expand(const Vector& x, const PolynomialSpec& spec) {
    const std::size_t n = x.size();
    const std::size_t cols = spec.degree() + 1;
    std::vector<double> entries(n * cols);
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            entries[i * cols + j] = p;
            p *= x[i];
        }
    }
    // The Matrix constructor rejects overflowed monomials (non-finite).
    return Matrix(n, cols, std::move(entries));
}

LinearFit fit_polynomial(const Vector& x, const Vector& y, const PolynomialSpec& spec) {
    if (x.size() != y.size()) throw ShapeError("fit_polynomial: x and y lengths differ");
    if (x.size() < spec.degree() + 1) {
        throw UnderDeterminedError("fit_polynomial: " + std::to_string(x.size()) +
                                   " samples for degree " + std::to_string(spec.degree()));
    }
    std::vector<std::string> names;
    names.reserve(spec.degree());
    for (std::size_t d = 1; d <= spec.degree(); ++d) names.push_back("x^" + std::to_string(d));

    // Warn while the solve can still proceed: spreads beyond 1e12 are
    // already rejected as rank deficient by the 1e-12 pivot tolerance.
    double spread = 0.0;
    LinearFit fit = fit_design(expand(x, spec), y, names, &spread);
    if (spread > 1e8) {
        fit.warnings.push_back("ill-conditioned monomial basis: triangular factor diagonal "
                               "spread exceeds 1e8; coefficients may be unreliable");
    }
    return fit;
}

}  // namespace regress
