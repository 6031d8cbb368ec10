#include "semirank/nonneg.hpp"

#include <optional>

#include "semirank/errors.hpp"

namespace semirank {

RationalNullBasis null_space(const RationalMatrix& w) {
    const std::size_t n = w.n_rows();
    const std::size_t m = w.n_cols();

    // Reduced row echelon form over the rationals.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = w.at(i, j);

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t pr = row;
        while (pr < n && a[pr][col] == 0) ++pr;
        if (pr == n) continue;
        std::swap(a[row], a[pr]);
        Rational inv = a[row][col];
        for (std::size_t j = col; j < m; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational factor = a[i][col];
            for (std::size_t j = col; j < m; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    RationalNullBasis result;
    std::vector<char> is_pivot(m, 0);
    for (std::size_t c : pivot_cols) is_pivot[c] = 1;
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        // Free coordinate set to 1, pivot coordinates balance it out.
        std::vector<Rational> q(m, Rational(0));
        q[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) q[pivot_cols[r]] = -a[r][f];
        result.basis.push_back(std::move(q));
    }
    result.dim = result.basis.size();
    return result;
}

namespace detail {

std::optional<std::vector<Rational>>
solve_nonnegative(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (b.size() != m) throw ShapeError("right-hand side length mismatch");
    if (m == 0) return std::vector<Rational>(n, Rational(0));

    // Tableau [A | I | b] with artificial basis; phase-1 minimizes the sum of
    // the artificials.  Bland's rule keeps the exact pivoting finite.
    const std::size_t total = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(total + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][total] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }

    auto reduced_cost = [&](std::size_t j) {
        // c_j - sum over rows whose basic variable is artificial.
        Rational rc(j >= n ? 1 : 0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) rc -= t[i][j];
        return rc;
    };

    for (;;) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (reduced_cost(j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            Rational cur = t[i][total] / t[i][enter];
            Rational bst = t[leave][total] / t[leave][enter];
            if (cur < bst || (cur == bst && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) break; // unbounded below cannot happen with cost >= 0

        Rational pivot = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational factor = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][total];
    if (objective != 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][total];
    return x;
}

} // namespace detail

namespace {

/// True when the cone {y : (Qy)_z >= 0 for z in zero_rows} contains a point
/// with y_k = sign.  Q is given row-wise; y is free, so y = u - v.
bool cone_direction_feasible(const std::vector<std::vector<Rational>>& q_rows,
                             const std::vector<std::size_t>& zero_rows,
                             std::size_t d, std::size_t k, int sign) {
    // Variables: u (d), v (d), slack s (one per zero row).
    const std::size_t nvars = 2 * d + zero_rows.size();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t zi = 0; zi < zero_rows.size(); ++zi) {
        std::vector<Rational> row(nvars, Rational(0));
        const auto& qr = q_rows[zero_rows[zi]];
        for (std::size_t c = 0; c < d; ++c) {
            row[c] = qr[c];
            row[d + c] = -qr[c];
        }
        row[2 * d + zi] = -1; // (Qy)_z - s = 0, s >= 0
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    std::vector<Rational> pin(nvars, Rational(0));
    pin[k] = 1;
    pin[d + k] = -1;
    a.push_back(std::move(pin));
    b.emplace_back(sign);
    return detail::solve_nonnegative(a, b).has_value();
}

} // namespace

UniqueHNonnegResult unique_h_nonneg(const RationalMatrix& x, const RationalMatrix& w) {
    if (x.n_rows() != w.n_rows())
        throw ShapeError("data and generator matrices have different row counts");
    const std::size_t n = w.n_rows();
    const std::size_t r = w.n_cols();

    std::vector<std::vector<Rational>> w_rows(n, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) w_rows[i][j] = w.at(i, j);

    RationalNullBasis null = null_space(w);
    const std::size_t d = null.dim;
    // Null basis as rows of Q: row j holds the j-th coordinate of each basis
    // vector, so (Qy)_j is the movement of h_j along direction y.
    std::vector<std::vector<Rational>> q_rows(r, std::vector<Rational>(d, Rational(0)));
    for (std::size_t v = 0; v < d; ++v)
        for (std::size_t j = 0; j < r; ++j) q_rows[j][v] = null.basis[v][j];

    UniqueHNonnegResult result;
    for (std::size_t col = 0; col < x.n_cols(); ++col) {
        std::vector<Rational> rhs(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) rhs[i] = x.at(i, col);
        // A rowless system constrains nothing; h = 0 is a valid solution.
        auto h0 = n == 0 ? std::optional<std::vector<Rational>>(
                               std::vector<Rational>(r, Rational(0)))
                         : detail::solve_nonnegative(w_rows, rhs);
        if (!h0)
            throw InfeasibleError("column " + std::to_string(col + 1) +
                                  " has no nonnegative solution");
        result.solutions.push_back(*h0);

        bool singleton = true;
        if (d > 0) {
            std::vector<std::size_t> zero_rows;
            for (std::size_t j = 0; j < r; ++j)
                if ((*h0)[j] == 0) zero_rows.push_back(j);
            // The solution set is a singleton iff no nonzero null direction y
            // keeps h0 + eps*Qy feasible, i.e. the cone {y : (Qy)_Z >= 0} is
            // trivial.  A nonzero member can be scaled so some y_k = +/-1.
            bool escape = false;
            for (std::size_t k = 0; k < d && !escape; ++k)
                for (int sign : {1, -1}) {
                    if (cone_direction_feasible(q_rows, zero_rows, d, k, sign)) {
                        escape = true;
                        break;
                    }
                }
            singleton = !escape;
        }
        result.per_column.push_back(singleton ? 1 : 0);
        if (!singleton) result.unique = false;
    }
    return result;
}

UniqueHNonnegResult unique_h_nonneg(const BinaryMatrix& x, const RationalMatrix& w) {
    return unique_h_nonneg(RationalMatrix::from_binary(x), w);
}

} // namespace semirank
