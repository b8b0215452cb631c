#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "regress/matrix.hpp"

namespace regress {

// Named numeric columns of equal length. Column names are unique and
// non-empty.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<std::string> names, std::vector<Vector> columns);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return names_.size(); }

    const std::vector<std::string>& column_names() const { return names_; }
    bool has_column(const std::string& name) const;
    // Throws ShapeError when the column does not exist.
    const Vector& column(const std::string& name) const;
    const Vector& column(std::size_t index) const { return columns_[index]; }

private:
    std::vector<std::string> names_;
    std::vector<Vector> columns_;
    std::size_t n_rows_ = 0;
};

// Comma-separated numeric table: first row is the header, every cell a
// decimal floating-point literal. No quoting; surrounding blanks in cells
// are ignored. Rows and columns in errors are 1-based, header included.
Dataset parse_csv(std::string_view text);

// Reads a whole file and parses it; throws IoError when unreadable.
Dataset read_csv_file(const std::string& path);

// Header plus one comma-separated row per sample, every value in shortest
// round-trip form so parse_csv(write_csv(d)) is exact.
std::string write_csv(const Dataset& dataset);

}  // namespace regress
