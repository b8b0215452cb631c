#include "regress/nonlinear.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "regress/errors.hpp"
#include "regress/qr.hpp"

namespace regress {

double eval_exponential(const ExponentialParams& p, double x) {
    const double bx = p.b * x;
    if (bx > 700.0) {
        throw EvalDomainError("eval_exponential: b*x = " + std::to_string(bx) +
                              " exceeds overflow guard of 700");
    }
    return p.a * std::exp(bx) + p.c;
}

ParameterizedModel exponential_model() {
    ParameterizedModel model;
    model.arity = 3;
    model.evaluate = [](std::span<const double> p, double x) {
        return eval_exponential(ExponentialParams{p[0], p[1], p[2]}, x);
    };
    model.analytic_jacobian = [](std::span<const double> p, double x) {
        const double bx = p[1] * x;
        if (bx > 700.0) {
            throw EvalDomainError("exponential_model: b*x exceeds overflow guard of 700");
        }
        const double e = std::exp(bx);
        return std::vector<double>{e, p[0] * x * e, 1.0};
    };
    return model;
}

std::string to_string(LMStatus status) {
    switch (status) {
        case LMStatus::Converged: return "Converged";
        case LMStatus::MaxIterReached: return "MaxIterReached";
        case LMStatus::SingularStep: return "SingularStep";
    }
    return "Unknown";
}

Matrix numerical_jacobian(const ParameterizedModel& model, const Vector& params,
                          const Vector& xs, double step) {
    if (params.size() != model.arity) {
        throw ShapeError("numerical_jacobian: params length != model arity");
    }
    const std::size_t m = xs.size();
    const std::size_t n = params.size();
    Matrix jac(m, n);
    std::vector<double> p(params.entries());
    for (std::size_t j = 0; j < n; ++j) {
        const double h = step * std::max(1.0, std::fabs(p[j]));
        const double saved = p[j];
        p[j] = saved + h;
        std::vector<double> fp(m);
        for (std::size_t i = 0; i < m; ++i) fp[i] = model.evaluate(p, xs[i]);
        p[j] = saved - h;
        for (std::size_t i = 0; i < m; ++i) {
            jac(i, j) = (fp[i] - model.evaluate(p, xs[i])) / (2.0 * h);
        }
        p[j] = saved;
    }
    return jac;
}

namespace {

double sum_squared_residuals(const ParameterizedModel& model, std::span<const double> p,
                             const Vector& xs, const Vector& ys, std::vector<double>* resid) {
    double sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - model.evaluate(p, xs[i]);
        if (resid != nullptr) (*resid)[i] = r;
        sse += r * r;
    }
    return sse;
}

Matrix model_jacobian(const ParameterizedModel& model, const Vector& params, const Vector& xs,
                      double step) {
    if (!model.analytic_jacobian) return numerical_jacobian(model, params, xs, step);
    Matrix jac(xs.size(), model.arity);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::vector<double> row = model.analytic_jacobian(params.entries(), xs[i]);
        if (row.size() != model.arity) {
            throw ShapeError("analytic_jacobian: row length != model arity");
        }
        for (std::size_t j = 0; j < model.arity; ++j) jac(i, j) = row[j];
    }
    return jac;
}

// Solves (J'J + lambda I) delta = J'r as the stacked least-squares system
// [J; sqrt(lambda) I] delta = [r; 0], reusing the QR path. Returns false
// when even the damped system is numerically rank deficient.
bool damped_step(const Matrix& jac, const std::vector<double>& resid, double lambda,
                 Vector* delta) {
    const std::size_t m = jac.rows();
    const std::size_t n = jac.cols();
    Matrix stacked(m + n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(i, j) = jac(i, j);
    const double root = std::sqrt(lambda);
    for (std::size_t j = 0; j < n; ++j) stacked(m + j, j) = root;
    Vector rhs = Vector::zeros(m + n);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = resid[i];
    try {
        *delta = solve_least_squares(stacked, rhs);
    } catch (const RankDeficientError&) {
        return false;
    }
    return true;
}

}  // namespace

LMResult levenberg_marquardt(const ParameterizedModel& model, const Vector& xs, const Vector& ys,
                             const Vector& p0, const LMConfig& cfg) {
    if (xs.size() != ys.size()) throw ShapeError("levenberg_marquardt: xs and ys lengths differ");
    if (p0.size() != model.arity) throw ShapeError("levenberg_marquardt: p0 length != arity");
    if (xs.size() < model.arity) {
        throw UnderDeterminedError("levenberg_marquardt: " + std::to_string(xs.size()) +
                                   " samples for " + std::to_string(model.arity) +
                                   " parameters");
    }

    const std::size_t m = xs.size();
    const std::size_t n = model.arity;

    std::vector<double> p(p0.entries());
    std::vector<double> resid(m);
    double sse = sum_squared_residuals(model, p, xs, ys, &resid);

    LMResult result;
    result.cost_trace.push_back(sse);
    result.status = LMStatus::MaxIterReached;

    double lambda = cfg.lambda0;
    std::size_t accepted = 0;
    bool done = false;

    while (!done && accepted < cfg.max_iter) {
        const Matrix jac = model_jacobian(model, Vector(p), xs, cfg.jacobian_step);

        double grad_inf = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double g = 0.0;
            for (std::size_t i = 0; i < m; ++i) g += jac(i, j) * resid[i];
            grad_inf = std::max(grad_inf, std::fabs(g));
        }
        if (grad_inf < cfg.tol_grad) {
            result.status = LMStatus::Converged;
            break;
        }

        // Trial loop: shrink the trust region until a step helps or a
        // termination condition fires.
        while (true) {
            Vector delta;
            if (!damped_step(jac, resid, lambda, &delta)) {
                if (lambda >= 1e8) {
                    result.status = LMStatus::SingularStep;
                    done = true;
                    break;
                }
                lambda *= cfg.nu;
                continue;
            }
            if (delta.norm2() < cfg.tol_step) {
                result.status = LMStatus::Converged;
                done = true;
                break;
            }

            std::vector<double> p_try(p);
            for (std::size_t j = 0; j < n; ++j) p_try[j] += delta[j];
            double sse_try;
            std::vector<double> resid_try(m);
            try {
                sse_try = sum_squared_residuals(model, p_try, xs, ys, &resid_try);
            } catch (const EvalDomainError&) {
                lambda *= cfg.nu;  // trial left the model's domain
                continue;
            }
            if (!std::isfinite(sse_try) || sse_try > sse) {
                lambda *= cfg.nu;
                continue;
            }

            const double decrease = sse - sse_try;
            p = std::move(p_try);
            resid = std::move(resid_try);
            const double prev = sse;
            sse = sse_try;
            result.cost_trace.push_back(sse);
            ++accepted;
            lambda /= cfg.nu;
            if (prev > 0.0 && decrease / prev < cfg.tol_cost) {
                result.status = LMStatus::Converged;
                done = true;
            }
            break;
        }
    }

    result.params = Vector(p);
    result.final_sse = sse;
    result.iterations = accepted;
    return result;
}

LMResult levenberg_marquardt(const ParameterizedModel& model, const Vector& xs, const Vector& ys,
                             const LMConfig& cfg) {
    return levenberg_marquardt(model, xs, ys, Vector::ones(model.arity), cfg);
}

}  // namespace regress
