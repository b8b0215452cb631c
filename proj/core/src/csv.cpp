#include "regress/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "regress/errors.hpp"
#include "regress/format.hpp"

namespace regress {

Dataset::Dataset(std::vector<std::string> names, std::vector<Vector> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
    if (names_.size() != columns_.size()) {
        throw ShapeError("Dataset: name count != column count");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& name : names_) {
        if (name.empty()) throw ShapeError("Dataset: empty column name");
        if (!seen.insert(name).second) throw ShapeError("Dataset: duplicate column '" + name + "'");
    }
    n_rows_ = columns_.empty() ? 0 : columns_[0].size();
    for (const Vector& col : columns_) {
        if (col.size() != n_rows_) throw ShapeError("Dataset: columns of unequal length");
    }
}

bool Dataset::has_column(const std::string& name) const {
    for (const std::string& n : names_)
        if (n == name) return true;
    return false;
}

const Vector& Dataset::column(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return columns_[i];
    throw ShapeError("Dataset: no column named '" + name + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
    if (cell.empty()) {
        throw CsvError(CsvError::Kind::Syntax, row, col,
                       "csv: empty cell at row " + std::to_string(row) + ", column " +
                           std::to_string(col));
    }
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto result = std::from_chars(first, last, value);
    if (result.ec != std::errc() || result.ptr != last || !std::isfinite(value)) {
        throw CsvError(CsvError::Kind::Syntax, row, col,
                       "csv: non-numeric cell '" + std::string(cell) + "' at row " +
                           std::to_string(row) + ", column " + std::to_string(col));
    }
    return value;
}

}  // namespace

Dataset parse_csv(std::string_view text) {
    // Split into lines; a trailing newline does not create a final row.
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    if (lines.empty() || (lines.size() == 1 && trim(lines[0]).empty())) {
        throw CsvError(CsvError::Kind::EmptyFile, 0, 0, "csv: empty input");
    }

    const std::vector<std::string_view> header = split_cells(lines[0]);
    const std::size_t n_cols = header.size();
    std::vector<std::string> names;
    names.reserve(n_cols);
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (header[c].empty()) {
            throw CsvError(CsvError::Kind::Syntax, 1, c + 1, "csv: empty header name in column " +
                                                                 std::to_string(c + 1));
        }
        names.emplace_back(header[c]);
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
        for (std::size_t d = c + 1; d < n_cols; ++d) {
            if (names[c] == names[d]) {
                throw CsvError(CsvError::Kind::Syntax, 1, d + 1,
                               "csv: duplicate header name '" + names[c] + "'");
            }
        }
    }

    std::vector<std::vector<double>> columns(n_cols);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::vector<std::string_view> cells = split_cells(lines[r]);
        if (cells.size() != n_cols) {
            throw CsvError(CsvError::Kind::RaggedRow, r + 1, 0,
                           "csv: row " + std::to_string(r + 1) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(n_cols));
        }
        for (std::size_t c = 0; c < n_cols; ++c) {
            columns[c].push_back(parse_cell(cells[c], r + 1, c + 1));
        }
    }

    std::vector<Vector> vectors;
    vectors.reserve(n_cols);
    for (std::vector<double>& col : columns) vectors.emplace_back(std::move(col));
    return Dataset(std::move(names), std::move(vectors));
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return parse_csv(buffer.str());
}

std::string write_csv(const Dataset& dataset) {
    std::string out;
    const std::vector<std::string>& names = dataset.column_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (c > 0) out += ',';
        out += names[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < dataset.n_rows(); ++r) {
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (c > 0) out += ',';
            out += format_double(dataset.column(c)[r]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace regress
