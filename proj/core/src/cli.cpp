#include "regress/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "regress/csv.hpp"
#include "regress/errors.hpp"
#include "regress/format.hpp"
#include "regress/linear.hpp"
#include "regress/lowess.hpp"
#include "regress/nonlinear.hpp"
#include "regress/polynomial.hpp"
#include "regress/qr.hpp"

namespace regress::cli {

namespace {

constexpr double kDefaultFrac = 2.0 / 3.0;
constexpr std::size_t kDefaultRobustIters = 3;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string features_array(const std::vector<std::string>& features) {
    std::string out = "[";
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (i > 0) out += ", ";
        out += quoted(features[i]);
    }
    out += "]";
    return out;
}

std::string model_name(ModelKind model) {
    switch (model) {
        case ModelKind::Linear: return "linear";
        case ModelKind::Poly: return "poly";
        case ModelKind::NlsExponential: return "nls-exponential";
    }
    return "unknown";
}

std::string render_fit_json(const std::string& model, const std::string& target,
                            const std::vector<std::string>& features, const LinearFit& fit,
                            const FitReport& report) {
    std::string out = "{\n";
    out += "  \"model\": " + quoted(model) + ",\n";
    out += "  \"target\": " + quoted(target) + ",\n";
    out += "  \"features\": " + features_array(features) + ",\n";
    out += "  \"intercept\": " + format_double(fit.intercept) + ",\n";
    out += "  \"coefficients\": {";
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
        out += i > 0 ? ",\n    " : "\n    ";
        out += quoted(fit.feature_names[i]) + ": " + format_double(fit.coefficients[i]);
    }
    out += fit.coefficients.empty() ? "},\n" : "\n  },\n";
    out += "  \"r2\": " + format_double(report.r_squared) + ",\n";
    out += "  \"mse\": " + format_double(report.mse) + ",\n";
    out += "  \"n_samples\": " + std::to_string(fit.n_samples) + "\n";
    out += "}\n";
    return out;
}

std::string render_nls_json(const std::string& target, const std::vector<std::string>& features,
                            const LMResult& result, std::size_t n_samples) {
    std::string out = "{\n";
    out += "  \"model\": \"nls-exponential\",\n";
    out += "  \"target\": " + quoted(target) + ",\n";
    out += "  \"features\": " + features_array(features) + ",\n";
    out += "  \"params\": {\n";
    out += "    \"a\": " + format_double(result.params[0]) + ",\n";
    out += "    \"b\": " + format_double(result.params[1]) + ",\n";
    out += "    \"c\": " + format_double(result.params[2]) + "\n";
    out += "  },\n";
    out += "  \"sse\": " + format_double(result.final_sse) + ",\n";
    out += "  \"iterations\": " + std::to_string(result.iterations) + ",\n";
    out += "  \"status\": " + quoted(to_string(result.status)) + ",\n";
    out += "  \"n_samples\": " + std::to_string(n_samples) + "\n";
    out += "}\n";
    return out;
}

std::string render_smooth_json(const LowessConfig& cfg, std::size_t n_samples) {
    std::string out = "{\n";
    out += "  \"model\": \"lowess\",\n";
    out += "  \"frac\": " + format_double(cfg.frac) + ",\n";
    out += "  \"robust_iters\": " + std::to_string(cfg.robust_iters) + ",\n";
    out += "  \"n_samples\": " + std::to_string(n_samples) + "\n";
    out += "}\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out.good()) throw IoError("failed writing '" + path + "'");
}

void deliver(const std::optional<std::string>& path, const std::string& content,
             std::ostream& fallback) {
    if (path.has_value()) {
        write_file(*path, content);
    } else {
        fallback << content;
    }
}

void echo_warnings(const LinearFit& fit, std::ostream& err) {
    for (const std::string& w : fit.warnings) err << "warning: " << w << "\n";
}

Matrix feature_matrix(const Dataset& data, const std::vector<std::string>& features) {
    Matrix x(data.n_rows(), features.size());
    for (std::size_t j = 0; j < features.size(); ++j) {
        const Vector& col = data.column(features[j]);
        for (std::size_t i = 0; i < data.n_rows(); ++i) x(i, j) = col[i];
    }
    return x;
}

Matrix power_matrix(const Vector& x, std::size_t degree) {
    Matrix m(x.size(), degree);
    for (std::size_t i = 0; i < x.size(); ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < degree; ++j) {
            p *= x[i];
            m(i, j) = p;
        }
    }
    return m;
}

int run_fit(const CliRequest& req, std::ostream& out, std::ostream& err) {
    const Dataset data = read_csv_file(req.input_path);
    const Vector& y = data.column(req.target);

    std::string result_json;
    Vector y_pred;

    switch (req.model) {
        case ModelKind::Linear: {
            const Matrix x = feature_matrix(data, req.features);
            const LinearFit fit = fit_multiple(x, y, req.features);
            echo_warnings(fit, err);
            const FitReport report = diagnostics(fit, y);
            result_json = render_fit_json("linear", req.target, req.features, fit, report);
            y_pred = predict(fit, x);
            break;
        }
        case ModelKind::Poly: {
            const Vector& x = data.column(req.features[0]);
            const PolynomialSpec spec(*req.degree);
            const LinearFit fit = fit_polynomial(x, y, spec);
            echo_warnings(fit, err);
            const FitReport report = diagnostics(fit, y);
            result_json = render_fit_json("poly", req.target, req.features, fit, report);
            y_pred = predict(fit, power_matrix(x, spec.degree()));
            break;
        }
        case ModelKind::NlsExponential: {
            const Vector& x = data.column(req.features[0]);
            const ParameterizedModel model = exponential_model();
            const Vector p0 = req.p0.has_value() ? Vector(*req.p0) : Vector::ones(model.arity);
            const LMResult result = levenberg_marquardt(model, x, y, p0);
            if (result.status != LMStatus::Converged) {
                err << "error: nonlinear fit did not converge: " << to_string(result.status)
                    << " after " << result.iterations << " iterations (sse "
                    << format_double(result.final_sse) << ")\n";
                return 3;
            }
            result_json = render_nls_json(req.target, req.features, result, data.n_rows());
            y_pred = Vector::zeros(data.n_rows());
            const ExponentialParams params{result.params[0], result.params[1], result.params[2]};
            for (std::size_t i = 0; i < x.size(); ++i) y_pred[i] = eval_exponential(params, x[i]);
            break;
        }
    }

    if (req.plot_path.has_value()) {
        const Vector& x_axis = data.column(req.features[0]);
        emit_plot_data(x_axis, y, y_pred, *req.plot_path);
    }
    deliver(req.output_path, result_json, out);
    return 0;
}

int run_smooth(const CliRequest& req, std::ostream& out, std::ostream& /*err*/) {
    const Dataset data = read_csv_file(req.input_path);
    const Vector& x = data.column(req.x_column);
    const Vector& y = data.column(req.y_column);

    LowessConfig cfg;
    cfg.frac = req.frac.value_or(kDefaultFrac);
    cfg.robust_iters = req.robust_iters.value_or(kDefaultRobustIters);

    const LowessResult result = smooth(x, y, cfg);

    if (req.plot_path.has_value()) {
        emit_plot_data(x, y, result.original_order_smoothed, *req.plot_path);
    }
    deliver(req.output_path, render_smooth_json(cfg, data.n_rows()), out);
    return 0;
}

// A fit file reduced to what prediction needs.
struct LoadedFit {
    std::string model;
    std::vector<std::string> features;
    double intercept = 0.0;
    std::vector<double> coefficients;  // linear: per feature; poly: x^1..x^degree
    ExponentialParams params;
};

LoadedFit load_fit_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse fit file '" + path + "': " + e.what());
    }

    try {
        LoadedFit fit;
        fit.model = doc.at("model").get<std::string>();
        if (fit.model == "lowess") {
            throw UsageError("fit file '" + path + "' holds a lowess smooth, which has no "
                             "prediction model");
        }
        fit.features = doc.at("features").get<std::vector<std::string>>();
        if (fit.model == "nls-exponential") {
            const auto& params = doc.at("params");
            fit.params.a = params.at("a").get<double>();
            fit.params.b = params.at("b").get<double>();
            fit.params.c = params.at("c").get<double>();
            if (fit.features.size() != 1) {
                throw IoError("fit file '" + path + "': nls-exponential needs exactly 1 feature");
            }
        } else if (fit.model == "linear" || fit.model == "poly") {
            fit.intercept = doc.at("intercept").get<double>();
            const auto& coeffs = doc.at("coefficients");
            if (fit.model == "linear") {
                for (const std::string& name : fit.features) {
                    fit.coefficients.push_back(coeffs.at(name).get<double>());
                }
            } else {
                if (fit.features.size() != 1) {
                    throw IoError("fit file '" + path + "': poly needs exactly 1 feature");
                }
                for (std::size_t d = 1; d <= coeffs.size(); ++d) {
                    fit.coefficients.push_back(
                        coeffs.at("x^" + std::to_string(d)).get<double>());
                }
            }
        } else {
            throw IoError("fit file '" + path + "': unknown model '" + fit.model + "'");
        }
        return fit;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("fit file '" + path + "' is missing fields: " + e.what());
    }
}

int run_predict(const CliRequest& req, std::ostream& out, std::ostream& /*err*/) {
    const LoadedFit loaded = load_fit_json(req.fit_path);
    const Dataset data = read_csv_file(req.input_path);

    Vector y_pred;
    if (loaded.model == "nls-exponential") {
        const Vector& x = data.column(loaded.features[0]);
        y_pred = Vector::zeros(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            y_pred[i] = eval_exponential(loaded.params, x[i]);
        }
    } else {
        LinearFit fit;
        fit.intercept = loaded.intercept;
        fit.coefficients = loaded.coefficients;
        fit.feature_names.resize(loaded.coefficients.size());
        const Matrix x = loaded.model == "poly"
                             ? power_matrix(data.column(loaded.features[0]),
                                            loaded.coefficients.size())
                             : feature_matrix(data, loaded.features);
        y_pred = predict(fit, x);
    }

    std::vector<std::string> names = data.column_names();
    std::vector<Vector> columns;
    columns.reserve(names.size() + 1);
    for (std::size_t c = 0; c < names.size(); ++c) columns.push_back(data.column(c));
    names.push_back("y_pred");
    columns.push_back(std::move(y_pred));
    deliver(req.output_path, write_csv(Dataset(std::move(names), std::move(columns))), out);
    return 0;
}

}  // namespace

void validate(const CliRequest& req) {
    switch (req.command) {
        case Command::Fit: {
            if (req.input_path.empty()) throw UsageError("fit: --input is required");
            if (req.target.empty()) throw UsageError("fit: --target is required");
            if (req.features.empty()) throw UsageError("fit: --features is required");
            const bool is_poly = req.model == ModelKind::Poly;
            if (is_poly && !req.degree.has_value()) {
                throw UsageError("fit: --degree is required with --model poly");
            }
            if (!is_poly && req.degree.has_value()) {
                throw UsageError("fit: --degree is only valid with --model poly");
            }
            if (is_poly && *req.degree > PolynomialSpec::kMaxDegree) {
                throw UsageError("fit: --degree must be at most " +
                                 std::to_string(PolynomialSpec::kMaxDegree));
            }
            if (is_poly && req.features.size() != 1) {
                throw UsageError("fit: --model poly takes exactly one feature column");
            }
            if (req.model == ModelKind::NlsExponential && req.features.size() != 1) {
                throw UsageError("fit: --model nls-exponential takes exactly one feature column");
            }
            if (req.p0.has_value() && req.model != ModelKind::NlsExponential) {
                throw UsageError("fit: --p0 is only valid with --model nls-exponential");
            }
            if (req.p0.has_value() && req.p0->size() != 3) {
                throw UsageError("fit: --p0 takes exactly three values a,b,c");
            }
            break;
        }
        case Command::Smooth: {
            if (req.input_path.empty()) throw UsageError("smooth: --input is required");
            if (req.x_column.empty()) throw UsageError("smooth: --x is required");
            if (req.y_column.empty()) throw UsageError("smooth: --y is required");
            if (req.frac.has_value() && (!(*req.frac > 0.0) || *req.frac > 1.0)) {
                throw UsageError("smooth: --frac must lie in (0, 1]");
            }
            break;
        }
        case Command::Predict: {
            if (req.fit_path.empty()) throw UsageError("predict: --fit is required");
            if (req.input_path.empty()) throw UsageError("predict: --input is required");
            break;
        }
    }
}

std::string render_plot_data(const Vector& x, const Vector& y_actual, const Vector& y_predicted) {
    const std::size_t n = x.size();
    if (y_actual.size() != n || y_predicted.size() != n) {
        throw ShapeError("render_plot_data: column lengths differ");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    std::string out = "x\ty_actual\ty_predicted\n";
    for (std::size_t i : order) {
        out += format_double(x[i]);
        out += '\t';
        out += format_double(y_actual[i]);
        out += '\t';
        out += format_double(y_predicted[i]);
        out += '\n';
    }
    return out;
}

void emit_plot_data(const Vector& x, const Vector& y_actual, const Vector& y_predicted,
                    const std::string& path) {
    write_file(path, render_plot_data(x, y_actual, y_predicted));
}

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
    try {
        validate(req);
        switch (req.command) {
            case Command::Fit: return run_fit(req, out, err);
            case Command::Smooth: return run_smooth(req, out, err);
            case Command::Predict: return run_predict(req, out, err);
        }
        throw Error("unreachable command");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidFracError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const CsvError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const UnderDeterminedError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const NonFiniteError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeTooLargeError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // RankDeficient, DegenerateTarget, EvalDomain and any other
        // numerical failure.
        err << "numerical error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace regress::cli
