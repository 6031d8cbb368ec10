#include "semirank/rational.hpp"

#include <sstream>

namespace semirank {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw FormatError("empty rational token");
    std::size_t slash = token.find('/');
    auto parse_int = [&](const std::string& s) -> mpz_class {
        if (s.empty()) throw FormatError("malformed rational '" + token + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw FormatError("malformed rational '" + token + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw FormatError("malformed rational '" + token + "'");
        return mpz_class(s);
    };
    if (slash == std::string::npos) {
        Rational q(parse_int(token));
        q.canonicalize();
        return q;
    }
    mpz_class num = parse_int(token.substr(0, slash));
    mpz_class den = parse_int(token.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + token + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalMatrix RationalMatrix::from_binary(const BinaryMatrix& m) {
    RationalMatrix out(m.n_rows(), m.n_cols());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            if (m.at(i, j)) out.set(i, j, Rational(1));
    return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool RationalMatrix::is_nonnegative() const {
    for (const Rational& q : entries_)
        if (q < 0) return false;
    return true;
}

bool RationalMatrix::is_binary() const {
    for (const Rational& q : entries_)
        if (q != 0 && q != 1) return false;
    return true;
}

BinaryMatrix RationalMatrix::to_binary() const {
    BinaryMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& q = at(i, j);
            if (q == 1)
                out.set(i, j, true);
            else if (q != 0)
                throw DomainError("entry " + rational_to_string(q) +
                                  " at (" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ") is not 0 or 1");
        }
    return out;
}

RationalMatrix parse_rational_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
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
        std::vector<Rational> row;
        std::string token;
        auto flush = [&]() {
            if (token.empty()) return;
            try {
                row.push_back(parse_rational(token));
            } catch (const FormatError& e) {
                throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
            }
            token.clear();
        };
        for (char c : line) {
            if (c == ' ' || c == ',') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw FormatError("line " + std::to_string(line_no) + ": row of width " +
                              std::to_string(row.size()) + " in a matrix of width " +
                              std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(rows);
}

std::string serialize_rational_matrix(const RationalMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        for (std::size_t j = 0; j < m.n_cols(); ++j) {
            if (j) out.push_back(' ');
            out += rational_to_string(m.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_cols() != b.n_rows())
        throw ShapeError("product shape mismatch: " + std::to_string(a.n_cols()) +
                         " inner columns vs " + std::to_string(b.n_rows()) +
                         " inner rows");
    RationalMatrix out(a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t k = 0; k < a.n_cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.n_cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                out.set(i, j, out.at(i, j) + aik * b.at(k, j));
            }
        }
    return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(m.n_cols(), m.n_rows());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

} // namespace semirank
