// Regenerates the committed fixtures under tests/golden/.
//
// The *_oracle.json files come from the exact-rational reference
// computations, not from the library under test. The cli_* files are byte
// snapshots of the command-line outputs on the sample datasets, used by the
// round-trip regression checks.
//
// Usage: make_goldens <golden-dir> <data-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/lowess_reference.hpp"
#include "oracle/rational.hpp"
#include "regress/cli.hpp"
#include "regress/format.hpp"

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << content;
}

std::string fit_oracle_json(const std::vector<std::vector<double>>& design,
                            const std::vector<double>& target,
                            const std::vector<std::string>& names) {
    const std::vector<double> beta = oracle::least_squares_exact(design, target);
    std::string out = "{\n";
    out += "  \"intercept\": " + regress::format_double(beta[0]) + ",\n";
    out += "  \"coefficients\": {\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += "    \"" + names[i] + "\": " + regress::format_double(beta[i + 1]);
        out += i + 1 < names.size() ? ",\n" : "\n";
    }
    out += "  }\n}\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_goldens <golden-dir> <data-dir>\n";
        return 1;
    }
    const std::filesystem::path golden_dir = argv[1];
    const std::string data_dir = argv[2];
    std::filesystem::create_directories(golden_dir);

    const std::vector<double> sizes = {1000, 1200, 1500, 1800, 2000};
    const std::vector<double> bedrooms = {2, 3, 3, 4, 4};
    const std::vector<double> prices = {150000, 180000, 210000, 240000, 270000};

    // Multiple regression oracle: design [1 | size | bedrooms].
    {
        std::vector<std::vector<double>> design;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            design.push_back({1.0, sizes[i], bedrooms[i]});
        }
        write_file(golden_dir / "multiple_31_oracle.json",
                   fit_oracle_json(design, prices, {"size", "bedrooms"}));
    }

    // Quadratic fit oracle: design [1 | x | x^2].
    {
        std::vector<std::vector<double>> design;
        for (double x : sizes) design.push_back({1.0, x, x * x});
        write_file(golden_dir / "poly2_21_oracle.json",
                   fit_oracle_json(design, prices, {"x^1", "x^2"}));
    }

    // LOWESS oracle, frac 0.3 with 3 robust iterations.
    {
        const std::vector<double> smoothed = oracle::lowess_reference(sizes, prices, 0.3, 3);
        std::string out = "{\n  \"frac\": 0.3,\n  \"robust_iters\": 3,\n  \"x_sorted\": [";
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            out += (i > 0 ? ", " : "") + regress::format_double(sizes[i]);
        }
        out += "],\n  \"y_smoothed\": [";
        for (std::size_t i = 0; i < smoothed.size(); ++i) {
            out += (i > 0 ? ", " : "") + regress::format_double(smoothed[i]);
        }
        out += "]\n}\n";
        write_file(golden_dir / "lowess_71_oracle.json", out);
    }

    // CLI byte snapshots.
    using regress::cli::CliRequest;
    using regress::cli::Command;
    using regress::cli::ModelKind;

    const auto capture = [&](const CliRequest& req, const std::string& json_name) {
        std::ostringstream out, err;
        const int code = regress::cli::run(req, out, err);
        if (code != 0) {
            std::cerr << "golden command failed (" << code << "): " << err.str() << "\n";
            std::exit(1);
        }
        write_file(golden_dir / json_name, out.str());
    };

    {
        CliRequest req;
        req.command = Command::Fit;
        req.model = ModelKind::Linear;
        req.input_path = data_dir + "/house_simple.csv";
        req.target = "price";
        req.features = {"size"};
        req.plot_path = (golden_dir / "cli_fit_linear.tsv").string();
        capture(req, "cli_fit_linear.json");
    }
    {
        CliRequest req;
        req.command = Command::Fit;
        req.model = ModelKind::Linear;
        req.input_path = data_dir + "/house_multi.csv";
        req.target = "price";
        req.features = {"size", "bedrooms"};
        capture(req, "cli_fit_multi.json");
    }
    {
        CliRequest req;
        req.command = Command::Fit;
        req.model = ModelKind::Poly;
        req.degree = 2;
        req.input_path = data_dir + "/house_simple.csv";
        req.target = "price";
        req.features = {"size"};
        capture(req, "cli_fit_poly.json");
    }
    {
        CliRequest req;
        req.command = Command::Smooth;
        req.input_path = data_dir + "/house_lowess.csv";
        req.x_column = "size";
        req.y_column = "price";
        req.frac = 0.3;
        req.robust_iters = 3;
        req.plot_path = (golden_dir / "cli_smooth.tsv").string();
        capture(req, "cli_smooth.json");
    }

    std::cout << "goldens written to " << golden_dir << "\n";
    return 0;
}
