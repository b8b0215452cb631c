#include "regress/lowess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "regress/errors.hpp"

namespace regress {

double tricube(double u) {
    u = std::fabs(u);
    if (u >= 1.0) return 0.0;
    const double t = 1.0 - u * u * u;
    return t * t * t;
}

double bisquare(double u) {
    u = std::fabs(u);
    if (u >= 1.0) return 0.0;
    const double t = 1.0 - u * u;
    return t * t;
}

namespace {

// Contiguous window of the k nearest neighbors of index i in sorted x,
// grown toward the closer endpoint; ties prefer the left (smaller x).
void nearest_window(const std::vector<double>& x, std::size_t i, std::size_t k, std::size_t* lo,
                    std::size_t* hi) {
    std::size_t l = i;
    std::size_t r = i;
    const std::size_t n = x.size();
    while (r - l + 1 < k) {
        if (l == 0) {
            ++r;
        } else if (r == n - 1) {
            --l;
        } else if (x[i] - x[l - 1] <= x[r + 1] - x[i]) {
            --l;
        } else {
            ++r;
        }
    }
    *lo = l;
    *hi = r;
}

// Weighted degree-1 fit over window [lo, hi] evaluated at x[i]. delta holds
// the robustness weights. Centering at x[i] makes the evaluated value the
// local intercept.
double fit_local(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& delta, std::size_t lo, std::size_t hi,
                 std::size_t i) {
    const double xi = x[i];
    const double d = std::max(xi - x[lo], x[hi] - xi);
    const std::size_t len = hi - lo + 1;

    if (d == 0.0) {  // every window x identical: the only defined limit
        double s = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) s += y[j];
        return s / static_cast<double>(len);
    }

    double sw = 0.0, st = 0.0, stt = 0.0, sy = 0.0, sty = 0.0;
    double sw_tricube = 0.0, sy_tricube = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
        const double kern = tricube((x[j] - xi) / d);
        const double w = kern * delta[j];
        const double t = x[j] - xi;
        sw += w;
        st += w * t;
        stt += w * t * t;
        sy += w * y[j];
        sty += w * t * y[j];
        sw_tricube += kern;
        sy_tricube += kern * y[j];
    }

    const double denom = sw * stt - st * st;
    if (denom > 1e-12 * sw * stt) {
        const double slope = (sw * sty - st * sy) / denom;
        return (sy - slope * st) / sw;
    }

    // Local system rank deficient after weighting: degrade to a weighted
    // mean, then to the plain mean if every weight vanished.
    if (sw > 0.0) return sy / sw;
    if (sw_tricube > 0.0) return sy_tricube / sw_tricube;
    double s = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) s += y[j];
    return s / static_cast<double>(len);
}

double median_abs(std::vector<double> values) {
    for (double& v : values) v = std::fabs(v);
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

LowessResult smooth(const Vector& x, const Vector& y, const LowessConfig& cfg) {
    const std::size_t n = x.size();
    if (y.size() != n) throw ShapeError("smooth: x and y lengths differ");
    if (n < 2) throw UnderDeterminedError("smooth: need at least 2 samples");
    if (!(cfg.frac > 0.0) || cfg.frac > 1.0) {
        throw InvalidFracError("smooth: frac must lie in (0, 1], got " +
                               std::to_string(cfg.frac));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = x[order[i]];
        ys[i] = y[order[i]];
    }

    std::size_t k = static_cast<std::size_t>(std::ceil(cfg.frac * static_cast<double>(n)));
    k = std::min(std::max<std::size_t>(k, 3), n);

    std::vector<std::size_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) nearest_window(xs, i, k, &lo[i], &hi[i]);

    std::vector<double> delta(n, 1.0);
    std::vector<double> smoothed(n);
    for (std::size_t i = 0; i < n; ++i) smoothed[i] = fit_local(xs, ys, delta, lo[i], hi[i], i);

    for (std::size_t pass = 0; pass < cfg.robust_iters; ++pass) {
        std::vector<double> resid(n);
        for (std::size_t i = 0; i < n; ++i) resid[i] = ys[i] - smoothed[i];
        const double med = median_abs(resid);
        if (med == 0.0) break;  // perfect fit, bisquare argument undefined
        for (std::size_t i = 0; i < n; ++i) delta[i] = bisquare(resid[i] / (6.0 * med));
        for (std::size_t i = 0; i < n; ++i)
            smoothed[i] = fit_local(xs, ys, delta, lo[i], hi[i], i);
    }

    LowessResult result;
    result.x_sorted = Vector(xs);
    result.y_smoothed = Vector(smoothed);
    Vector by_input = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) by_input[order[i]] = smoothed[i];
    result.original_order_smoothed = std::move(by_input);
    result.config = cfg;
    return result;
}

}  // namespace regress
