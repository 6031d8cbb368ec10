#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "semirank/errors.hpp"
#include "semirank/matrix.hpp"

namespace semirank {

/// Exact rational scalar.  Always kept canonical: reduced fraction with a
/// positive denominator (mpq_class maintains this once canonicalized).
using Rational = mpq_class;

/// Build a canonical rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Parse "p/q" or an integer literal (optional leading '-').
Rational parse_rational(const std::string& token);

/// Render canonically: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Dense matrix of exact rationals.  Entries are canonical on construction.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RationalMatrix from_binary(const BinaryMatrix& m);

    /// Test helper: build from explicit rows of rationals.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t n_rows() const { return rows_; }
    std::size_t n_cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }

    void set(std::size_t i, std::size_t j, Rational value) {
        check_index(i, j);
        value.canonicalize();
        entries_[i * cols_ + j] = std::move(value);
    }

    bool is_nonnegative() const;
    bool is_binary() const;

    /// Requires is_binary(); converts losslessly.
    BinaryMatrix to_binary() const;

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const RationalMatrix& other) const { return !(*this == other); }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw BoundsError("matrix index (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside " + std::to_string(rows_) +
                              "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Parse a rational matrix: one row per line, entries "p/q" or integers,
/// spaces or commas as separators, `#` comments and blank lines skipped.
RationalMatrix parse_rational_matrix(const std::string& text);

std::string serialize_rational_matrix(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix transpose(const RationalMatrix& m);

} // namespace semirank
