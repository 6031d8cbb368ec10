#include "semirank/matrix.hpp"

#include <sstream>

namespace semirank {

std::string to_string(Semiring s) {
    switch (s) {
        case Semiring::Real: return "real";
        case Semiring::Nonnegative: return "nonneg";
        case Semiring::Binary: return "binary";
        case Semiring::Z2: return "z2";
        case Semiring::Boolean: return "boolean";
    }
    throw DomainError("unknown semiring tag");
}

Semiring semiring_from_string(const std::string& name) {
    if (name == "real") return Semiring::Real;
    if (name == "nonneg" || name == "nonnegative") return Semiring::Nonnegative;
    if (name == "binary") return Semiring::Binary;
    if (name == "z2") return Semiring::Z2;
    if (name == "boolean" || name == "bool") return Semiring::Boolean;
    throw DomainError("unknown semiring '" + name +
                      "'; expected one of real, nonneg, binary, z2, boolean");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    BinaryMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1) throw DomainError("entry outside {0,1}");
            m.set(i, j, v == 1);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_row_vectors(const std::vector<BoolVector>& rows,
                                            std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw ShapeError("row vector length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i].get(j));
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_column_vectors(const std::vector<BoolVector>& cols,
                                               std::size_t rows) {
    BinaryMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw ShapeError("column vector length does not match row count");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j].get(i));
    }
    return m;
}

BoolVector BinaryMatrix::row(std::size_t i) const {
    if (i >= rows_) throw BoundsError("row index out of range");
    BoolVector v(cols_);
    auto& words = v.mutable_words();
    for (std::size_t k = 0; k < words_per_row_; ++k)
        words[k] = bits_[i * words_per_row_ + k];
    return v;
}

BoolVector BinaryMatrix::column(std::size_t j) const {
    if (j >= cols_) throw BoundsError("column index out of range");
    BoolVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, j)) v.set(i, true);
    return v;
}

std::vector<BoolVector> BinaryMatrix::rows_as_vectors() const {
    std::vector<BoolVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<BoolVector> BinaryMatrix::columns_as_vectors() const {
    std::vector<BoolVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

std::size_t BinaryMatrix::n_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryMatrix::ones_cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(n_ones());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j)) cells.emplace_back(i, j);
    return cells;
}

bool BinaryMatrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

BinaryMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<bool>> rows;
    std::size_t width = 0;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" ,");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::vector<bool> row;
        for (std::size_t pos = 0; pos < line.size(); ++pos) {
            char c = line[pos];
            if (c == ' ' || c == ',') continue;
            if (c == '0' || c == '1') {
                row.push_back(c == '1');
                continue;
            }
            throw FormatError("line " + std::to_string(line_no) + ", column " +
                              std::to_string(pos + 1) + ": unexpected character '" +
                              std::string(1, c) + "' (expected 0, 1, space or comma)");
        }
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw FormatError("line " + std::to_string(line_no) + ": row of width " +
                              std::to_string(row.size()) + " in a matrix of width " +
                              std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    BinaryMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (rows[i][j]) m.set(i, j, true);
    return m;
}

std::string serialize_matrix(const BinaryMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        for (std::size_t j = 0; j < m.n_cols(); ++j) {
            if (j) out.push_back(' ');
            out.push_back(m.at(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.n_cols(), m.n_rows());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            if (m.at(i, j)) t.set(j, i, true);
    return t;
}

namespace {

void check_index_set(const std::vector<std::size_t>& idx, std::size_t bound,
                     const char* what) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= bound)
            throw BoundsError(std::string(what) + " index " + std::to_string(idx[k]) +
                              " outside range [0, " + std::to_string(bound) + ")");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw DomainError(std::string(what) +
                              " indices must be strictly increasing");
    }
}

} // namespace

BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    check_index_set(rows, m.n_rows(), "row");
    check_index_set(cols, m.n_cols(), "column");
    BinaryMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (m.at(rows[i], cols[j])) out.set(i, j, true);
    return out;
}

} // namespace semirank
