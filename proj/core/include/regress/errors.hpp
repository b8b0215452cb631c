#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regress {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension mismatch between operands (rows/cols/lengths).
class ShapeError : public Error {
public:
    using Error::Error;
};

// A NaN or infinity reached a constructor. Values are validated at the
// boundary so solvers never see non-finite input.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

// Design matrix columns are linearly dependent; coefficients would not be
// unique.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

// Fewer samples than the model needs.
class UnderDeterminedError : public Error {
public:
    using Error::Error;
};

// Target variance is zero and the fit is not perfect, so R-squared is
// undefined.
class DegenerateTargetError : public Error {
public:
    using Error::Error;
};

// Polynomial degree above the hard cap of 30.
class DegreeTooLargeError : public Error {
public:
    using Error::Error;
};

// A model was evaluated outside its stated domain (e.g. exp overflow).
class EvalDomainError : public Error {
public:
    using Error::Error;
};

// LOWESS fraction outside (0, 1].
class InvalidFracError : public Error {
public:
    using Error::Error;
};

// CSV parse failure. Rows and columns are 1-based; the header is row 1.
class CsvError : public Error {
public:
    enum class Kind { Syntax, RaggedRow, EmptyFile };

    CsvError(Kind kind, std::size_t row, std::size_t col, const std::string& what)
        : Error(what), kind_(kind), row_(row), col_(col) {}

    Kind kind() const { return kind_; }
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    Kind kind_;
    std::size_t row_;
    std::size_t col_;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Command-line request violates the CLI contract.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace regress
