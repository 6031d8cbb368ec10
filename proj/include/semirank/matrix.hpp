#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semirank/bitvec.hpp"
#include "semirank/errors.hpp"

namespace semirank {

/// The five coefficient structures a factorization can live in.
enum class Semiring { Real, Nonnegative, Binary, Z2, Boolean };

std::string to_string(Semiring s);
Semiring semiring_from_string(const std::string& name);

/// Dense matrix over {0,1} with bit-packed rows.
///
/// Rows are stored as runs of 64-bit words so that row-level operations
/// (OR, XOR, domination) run word-parallel.  The empty 0x0 matrix is legal;
/// every rank of it is 0.
class BinaryMatrix {
public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_, 0) {}

    static BinaryMatrix identity(std::size_t n) {
        BinaryMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BinaryMatrix ones(std::size_t rows, std::size_t cols) {
        BinaryMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, true);
        return m;
    }

    /// Test helper: build from explicit 0/1 rows.
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    /// Assemble a matrix whose i-th row is rows[i] (all of equal length).
    static BinaryMatrix from_row_vectors(const std::vector<BoolVector>& rows,
                                         std::size_t cols);

    /// Assemble a matrix whose j-th column is cols[j] (all of equal length).
    static BinaryMatrix from_column_vectors(const std::vector<BoolVector>& cols,
                                            std::size_t rows);

    std::size_t n_rows() const { return rows_; }
    std::size_t n_cols() const { return cols_; }

    bool at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (bits_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value) {
        check_index(i, j);
        std::uint64_t mask = std::uint64_t{1} << (j & 63);
        std::uint64_t& w = bits_[i * words_per_row_ + (j >> 6)];
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }

    /// Copy of row i as a BoolVector of length n_cols().
    BoolVector row(std::size_t i) const;

    /// Copy of column j as a BoolVector of length n_rows().
    BoolVector column(std::size_t j) const;

    std::vector<BoolVector> rows_as_vectors() const;
    std::vector<BoolVector> columns_as_vectors() const;

    std::size_t n_ones() const;

    /// All positions of 1-entries in row-major order (0-based).
    std::vector<std::pair<std::size_t, std::size_t>> ones_cells() const;

    bool is_zero() const;

    bool operator==(const BinaryMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }
    bool operator!=(const BinaryMatrix& other) const { return !(*this == other); }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw BoundsError("matrix index (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside " + std::to_string(rows_) +
                              "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Parse a 0/1 matrix from text: one row per line, entries separated by
/// spaces or commas (or adjacent), `#` comment lines and blank lines skipped.
/// Input with no data lines yields the empty 0x0 matrix.
BinaryMatrix parse_matrix(const std::string& text);

/// Inverse of parse_matrix: one row per line, entries separated by single
/// spaces.  parse_matrix(serialize_matrix(m)) == m for every matrix with at
/// least one column (and for the 0x0 matrix).
std::string serialize_matrix(const BinaryMatrix& m);

BinaryMatrix transpose(const BinaryMatrix& m);

/// Rows and cols are 0-based, strictly increasing index sets.
BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);

} // namespace semirank
