#include "semirank/field_ranks.hpp"

#include <algorithm>
#include <numeric>

namespace semirank {

namespace {

// Fraction-free elimination shared by rank_real and det_int.  Divisions are
// exact: after step k every entry is a (k+1)-minor of the original matrix
// (Bareiss), so intermediate growth stays polynomial in the entry size.
struct BareissState {
    std::vector<std::vector<mpz_class>> a;
    std::vector<std::size_t> perm; // current position -> original row index
    int sign = 1;

    explicit BareissState(const BinaryMatrix& m)
        : a(m.n_rows(), std::vector<mpz_class>(m.n_cols())),
          perm(m.n_rows()) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = 0; i < m.n_rows(); ++i)
            for (std::size_t j = 0; j < m.n_cols(); ++j)
                if (m.at(i, j)) a[i][j] = 1;
    }
};

} // namespace

FieldRankResult rank_real(const BinaryMatrix& m) {
    const std::size_t n = m.n_rows();
    const std::size_t cols = m.n_cols();
    BareissState st(m);
    FieldRankResult out;
    mpz_class prev = 1;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols && k < n; ++j) {
        // Pivot: among unused rows with a nonzero in column j, the lowest
        // original index.
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (st.a[i][j] != 0 && (best == n || st.perm[i] < st.perm[best])) best = i;
        }
        if (best == n) continue;
        std::swap(st.a[k], st.a[best]);
        std::swap(st.perm[k], st.perm[best]);
        out.pivot_rows.push_back(st.perm[k]);
        out.pivot_cols.push_back(j);
        const mpz_class pivot = st.a[k][j];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t l = j + 1; l < cols; ++l) {
                mpz_class t = pivot * st.a[i][l] - st.a[i][j] * st.a[k][l];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                st.a[i][l] = t;
            }
            st.a[i][j] = 0;
        }
        prev = pivot;
        ++k;
    }
    out.rank = k;
    return out;
}

FieldRankResult rank_z2(const BinaryMatrix& m) {
    const std::size_t n = m.n_rows();
    const std::size_t cols = m.n_cols();
    std::vector<BoolVector> rows = m.rows_as_vectors();
    std::vector<bool> used(n, false);
    FieldRankResult out;
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && rows[i].get(j)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) continue;
        used[pivot] = true;
        out.pivot_rows.push_back(pivot);
        out.pivot_cols.push_back(j);
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && rows[i].get(j)) rows[i] ^= rows[pivot];
    }
    out.rank = out.pivot_rows.size();
    return out;
}

mpz_class det_int(const BinaryMatrix& m) {
    if (m.n_rows() != m.n_cols())
        throw ShapeError("determinant requires a square matrix");
    const std::size_t n = m.n_rows();
    if (n == 0) return 1; // empty product
    BareissState st(m);
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (st.a[i][k] != 0 && (best == n || st.perm[i] < st.perm[best])) best = i;
        }
        if (best == n) return 0;
        if (best != k) {
            std::swap(st.a[k], st.a[best]);
            std::swap(st.perm[k], st.perm[best]);
            st.sign = -st.sign;
        }
        const mpz_class pivot = st.a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t l = k + 1; l < n; ++l) {
                mpz_class t = pivot * st.a[i][l] - st.a[i][k] * st.a[k][l];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                st.a[i][l] = t;
            }
            st.a[i][k] = 0;
        }
        prev = pivot;
    }
    return st.sign * st.a[n - 1][n - 1];
}

int det_z2(const BinaryMatrix& m) {
    if (m.n_rows() != m.n_cols())
        throw ShapeError("determinant requires a square matrix");
    return rank_z2(m).rank == m.n_rows() ? 1 : 0;
}

} // namespace semirank
