#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "regress/matrix.hpp"

namespace regress {

// A curve model y = f(params, x). evaluate must return a finite value for
// inputs inside the model's domain and throw EvalDomainError outside it.
// analytic_jacobian, when set, returns the per-parameter partials of f at
// one sample and is preferred over finite differences by the solver.
struct ParameterizedModel {
    std::size_t arity = 0;
    std::function<double(std::span<const double> params, double x)> evaluate;
    std::function<std::vector<double>(std::span<const double> params, double x)>
        analytic_jacobian;
};

// Parameters of the exponential growth model a * exp(b * x) + c.
struct ExponentialParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// a * exp(b * x) + c, guarded against overflow: b * x above 700 throws
// EvalDomainError.
double eval_exponential(const ExponentialParams& p, double x);

// The exponential model packaged for the solver, params ordered (a, b, c),
// with analytic partials.
ParameterizedModel exponential_model();

struct LMConfig {
    double lambda0 = 1e-3;       // initial damping
    double nu = 10.0;            // damping multiplier
    std::size_t max_iter = 200;  // accepted-step budget
    double tol_cost = 1e-10;     // relative SSE decrease threshold
    double tol_grad = 1e-10;     // gradient infinity-norm threshold
    double tol_step = 1e-12;     // step 2-norm threshold
    double jacobian_step = 1e-6; // finite-difference base step
};

enum class LMStatus { Converged, MaxIterReached, SingularStep };

std::string to_string(LMStatus status);

// Solver outcome. cost_trace holds the SSE at the start plus after every
// accepted step, so it is non-increasing.
struct LMResult {
    Vector params;
    double final_sse = 0.0;
    std::size_t iterations = 0;
    LMStatus status = LMStatus::MaxIterReached;
    std::vector<double> cost_trace;
};

// Central-difference Jacobian of the model predictions: entry (i, j) is
// d f(params, xs[i]) / d params[j] with per-parameter step
// step * max(1, |params[j]|). EvalDomainError from the model propagates.
Matrix numerical_jacobian(const ParameterizedModel& model, const Vector& params,
                          const Vector& xs, double step = 1e-6);

// Damped Gauss-Newton minimization of SSE(p) = sum (ys_i - f(p, xs_i))^2.
// Accepted steps never increase the SSE; an EvalDomainError raised while
// probing a trial step counts as a rejected step. The damped system is
// solved as the stacked least-squares problem [J; sqrt(lambda) I].
LMResult levenberg_marquardt(const ParameterizedModel& model, const Vector& xs, const Vector& ys,
                             const Vector& p0, const LMConfig& cfg = {});

// Same, starting from the all-ones parameter vector.
LMResult levenberg_marquardt(const ParameterizedModel& model, const Vector& xs, const Vector& ys,
                             const LMConfig& cfg = {});

}  // namespace regress
