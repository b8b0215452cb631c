#include <doctest.h>

#include <cmath>
#include <vector>

#include <json.hpp>

#include "regress/errors.hpp"
#include "regress/polynomial.hpp"
#include "regress/qr.hpp"
#include "test_util.hpp"

using namespace regress;

namespace {

const std::vector<double> kSizes = {1000, 1200, 1500, 1800, 2000};
const std::vector<double> kPrices = {150000, 180000, 210000, 240000, 270000};

double sse_of(const LinearFit& fit) {
    double s = 0.0;
    for (double r : fit.residuals.entries()) s += r * r;
    return s;
}

}  // namespace

TEST_CASE("expand produces monomial rows") {
    const Matrix row = expand(Vector{2}, PolynomialSpec(3));
    CHECK(row.rows() == 1);
    CHECK(row.cols() == 4);
    CHECK(row(0, 0) == 1.0);
    CHECK(row(0, 1) == 2.0);
    CHECK(row(0, 2) == 4.0);
    CHECK(row(0, 3) == 8.0);

    const Matrix ones = expand(Vector{5, 7}, PolynomialSpec(0));
    CHECK(ones.cols() == 1);
    CHECK(ones(0, 0) == 1.0);
    CHECK(ones(1, 0) == 1.0);

    const Matrix quad = expand(Vector{1, 2, 3}, PolynomialSpec(2));
    CHECK(quad(1, 2) == 4.0);
    CHECK(quad(2, 2) == 9.0);
}

TEST_CASE("degree cap is enforced") {
    CHECK_THROWS_AS(PolynomialSpec(31), DegreeTooLargeError);
    CHECK_NOTHROW(PolynomialSpec(30));
}

TEST_CASE("quadratic data is fit exactly") {
    const Vector x{-1, 0, 1, 2};
    Vector y = Vector::zeros(4);
    for (std::size_t i = 0; i < 4; ++i) y[i] = x[i] * x[i];
    const LinearFit fit = fit_polynomial(x, y, PolynomialSpec(2));
    CHECK(std::fabs(fit.intercept) <= 1e-10);
    CHECK(std::fabs(fit.coefficients[0]) <= 1e-10);
    CHECK(fit.coefficients[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fit.feature_names == std::vector<std::string>{"x^1", "x^2"});
}

TEST_CASE("degree zero fits the mean") {
    const LinearFit fit = fit_polynomial(Vector{1, 2, 3, 4}, Vector{3, 5, 7, 13},
                                         PolynomialSpec(0));
    CHECK(testutil::close_rel(fit.intercept, 7.0, 1e-12));
    CHECK(fit.coefficients.empty());
}

TEST_CASE("house-data quadratic matches the committed rational oracle") {
    const LinearFit fit = fit_polynomial(Vector(kSizes), Vector(kPrices), PolynomialSpec(2));
    const auto golden = nlohmann::json::parse(testutil::slurp(testutil::golden_path(
        "poly2_21_oracle.json")));
    CHECK(testutil::close_scaled(fit.intercept, golden.at("intercept").get<double>(), 1e-8));
    CHECK(testutil::close_scaled(fit.coefficients[0],
                                 golden.at("coefficients").at("x^1").get<double>(), 1e-8));
    CHECK(testutil::close_scaled(fit.coefficients[1],
                                 golden.at("coefficients").at("x^2").get<double>(), 1e-8));
}

TEST_CASE("underdetermined and rank-deficient polynomial designs are rejected") {
    CHECK_THROWS_AS(fit_polynomial(Vector{1, 2}, Vector{1, 2}, PolynomialSpec(2)),
                    UnderDeterminedError);
    // Three samples, only two distinct abscissae: the quadratic design
    // collapses.
    CHECK_THROWS_AS(fit_polynomial(Vector{1, 1, 2}, Vector{1, 1, 2}, PolynomialSpec(2)),
                    RankDeficientError);
}

TEST_CASE("training error is non-increasing in degree") {
    double previous = -1.0;
    for (std::size_t degree = 0; degree <= 3; ++degree) {
        const LinearFit fit = fit_polynomial(Vector(kSizes), Vector(kPrices),
                                             PolynomialSpec(degree));
        const double sse = sse_of(fit);
        if (degree > 0) CHECK(sse <= previous + 1e-6 * std::max(1.0, previous));
        previous = sse;
    }
}

TEST_CASE("n distinct points interpolate at degree n-1") {
    const Vector x{0.5, 1.5, 2.0, 3.25, 4.0};
    const Vector y{2.0, -1.0, 4.0, 0.5, 3.0};
    for (std::size_t n = 2; n <= 5; ++n) {
        Vector xs = Vector::zeros(n);
        Vector ys = Vector::zeros(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = x[i];
            ys[i] = y[i];
        }
        const LinearFit fit = fit_polynomial(xs, ys, PolynomialSpec(n - 1));
        CHECK(fit.residuals.norm_inf() <= 1e-8 * ys.norm_inf());
    }
}

TEST_CASE("fit_polynomial is bit-identical to expanding and solving directly") {
    const PolynomialSpec spec(2);
    const Vector x(kSizes);
    const Vector y(kPrices);
    const LinearFit fit = fit_polynomial(x, y, spec);
    const Vector direct = solve_least_squares(expand(x, spec), y);
    CHECK(fit.intercept == direct[0]);
    CHECK(fit.coefficients[0] == direct[1]);
    CHECK(fit.coefficients[1] == direct[2]);
}

TEST_CASE("an ill-conditioned monomial basis attaches a warning") {
    // Large abscissae at moderate degree land in the still-solvable hazard
    // band; pushing the degree further collapses the estimated rank.
    std::vector<double> x, y;
    for (int i = 0; i < 12; ++i) {
        x.push_back(1000.0 + 100.0 * i);
        y.push_back(150000.0 + 60.0 * i);
    }
    const LinearFit fit = fit_polynomial(Vector(x), Vector(y), PolynomialSpec(4));
    CHECK(!fit.warnings.empty());
    CHECK_THROWS_AS(fit_polynomial(Vector(x), Vector(y), PolynomialSpec(9)),
                    RankDeficientError);

    const LinearFit tame = fit_polynomial(Vector{-1, 0, 1, 2}, Vector{1, 0, 1, 4},
                                          PolynomialSpec(2));
    CHECK(tame.warnings.empty());
}
