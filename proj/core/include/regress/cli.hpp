#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regress/matrix.hpp"

namespace regress::cli {

enum class Command { Fit, Predict, Smooth };
enum class ModelKind { Linear, Poly, NlsExponential };

// One parsed command-line invocation. validate() enforces the cross-field
// rules (degree only and always with poly, p0 only with nls-exponential,
// frac in range) before any file is touched.
struct CliRequest {
    Command command = Command::Fit;

    ModelKind model = ModelKind::Linear;
    std::string input_path;
    std::string target;
    std::vector<std::string> features;
    std::optional<std::size_t> degree;
    std::optional<std::vector<double>> p0;

    std::string x_column;  // smooth
    std::string y_column;  // smooth
    std::optional<double> frac;
    std::optional<std::size_t> robust_iters;

    std::string fit_path;  // predict

    std::optional<std::string> output_path;  // default: standard output
    std::optional<std::string> plot_path;
};

// Throws UsageError when the request violates the CLI contract.
void validate(const CliRequest& request);

// Executes a validated request: reads the input, fits/smooths/predicts,
// writes the result JSON (or prediction CSV) and optional plot data.
// Returns the process exit code: 0 success, 1 usage error, 2 data error,
// 3 numerical failure. Error text goes to err.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

// Tab-separated plot table, header "x\ty_actual\ty_predicted", rows sorted
// ascending by x (stable on ties), values in shortest round-trip form.
std::string render_plot_data(const Vector& x, const Vector& y_actual, const Vector& y_predicted);

// Renders and writes the plot table; throws IoError when the file cannot
// be written.
void emit_plot_data(const Vector& x, const Vector& y_actual, const Vector& y_predicted,
                    const std::string& path);

}  // namespace regress::cli
