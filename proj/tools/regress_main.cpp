// Command-line front end: CSV in, JSON and plot data out.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regress/cli.hpp"

namespace {

regress::cli::ModelKind parse_model(const std::string& name) {
    if (name == "linear") return regress::cli::ModelKind::Linear;
    if (name == "poly") return regress::cli::ModelKind::Poly;
    if (name == "nls-exponential") return regress::cli::ModelKind::NlsExponential;
    throw CLI::ValidationError("--model", "unknown model '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regression toolkit: least-squares fits, curve fitting and LOWESS smoothing"};
    app.require_subcommand(1);

    regress::cli::CliRequest req;

    std::string model_name = "linear";
    std::string out_path;
    std::string plot_path;
    std::vector<double> p0;
    std::size_t degree = 0;
    double frac = 0.0;
    std::size_t iters = 0;

    CLI::App* fit = app.add_subcommand("fit", "Fit a model to CSV data");
    fit->add_option("--model", model_name, "Model family: linear, poly or nls-exponential")
        ->check(CLI::IsMember({"linear", "poly", "nls-exponential"}));
    fit->add_option("--input", req.input_path, "Input CSV file")->required();
    fit->add_option("--target", req.target, "Target column name")->required();
    fit->add_option("--features", req.features, "Feature column names, comma separated")
        ->required()
        ->delimiter(',');
    CLI::Option* degree_opt = fit->add_option("--degree", degree, "Polynomial degree");
    CLI::Option* p0_opt =
        fit->add_option("--p0", p0, "Initial parameters a,b,c for nls-exponential")
            ->delimiter(',');
    fit->add_option("--out", out_path, "Result JSON path (default: standard output)");
    fit->add_option("--plot", plot_path, "Plot data TSV path");

    CLI::App* predict = app.add_subcommand("predict", "Apply a saved fit to new data");
    predict->add_option("--fit", req.fit_path, "Fit JSON produced by the fit command")
        ->required();
    predict->add_option("--input", req.input_path, "Feature CSV file")->required();
    predict->add_option("--out", out_path, "Prediction CSV path (default: standard output)");

    CLI::App* smooth = app.add_subcommand("smooth", "LOWESS-smooth a scatter of points");
    smooth->add_option("--input", req.input_path, "Input CSV file")->required();
    smooth->add_option("--x", req.x_column, "Abscissa column name")->required();
    smooth->add_option("--y", req.y_column, "Ordinate column name")->required();
    CLI::Option* frac_opt =
        smooth->add_option("--frac", frac, "Fraction of samples per local window, in (0, 1]");
    CLI::Option* iters_opt =
        smooth->add_option("--iters", iters, "Number of robustifying iterations");
    smooth->add_option("--out", out_path, "Result JSON path (default: standard output)");
    smooth->add_option("--plot", plot_path, "Plot data TSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    if (fit->parsed()) {
        req.command = regress::cli::Command::Fit;
        req.model = parse_model(model_name);
        if (degree_opt->count() > 0) req.degree = degree;
        if (p0_opt->count() > 0) req.p0 = p0;
    } else if (predict->parsed()) {
        req.command = regress::cli::Command::Predict;
    } else {
        req.command = regress::cli::Command::Smooth;
        if (frac_opt->count() > 0) req.frac = frac;
        if (iters_opt->count() > 0) req.robust_iters = iters;
    }
    if (!out_path.empty()) req.output_path = out_path;
    if (!plot_path.empty()) req.plot_path = plot_path;

    return regress::cli::run(req, std::cout, std::cerr);
}
