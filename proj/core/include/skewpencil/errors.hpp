#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewpencil {

// All library failures derive from Error. `kind` is a stable machine-readable
// tag (the CLI forwards it verbatim in JSON diagnostics), `detail` is prose.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          detail_(std::move(detail)) {}

    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(std::string kind, std::string detail) {
    throw Error(std::move(kind), std::move(detail));
}

// Skew-symmetry violation, remembers where it was found.
class NotSkewError : public Error {
public:
    NotSkewError(char which, std::size_t i, std::size_t j)
        : Error("NotSkew", std::string("matrix ") + which + " violates skew-symmetry at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")"),
          which_(which), i_(i), j_(j) {}

    char which() const { return which_; }
    std::size_t row() const { return i_; }
    std::size_t col() const { return j_; }

private:
    char which_;
    std::size_t i_, j_;
};

// Input text or JSON that does not match the expected shape. Row/column are
// 1-based for syntax errors and matrix indices for located entry errors.
class ParseError : public Error {
public:
    ParseError(std::string detail, std::size_t row, std::size_t col)
        : Error("Parse", detail + " (row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ")"),
          row_(row), col_(col) {}

    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

}  // namespace skewpencil
