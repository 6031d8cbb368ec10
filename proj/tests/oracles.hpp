#pragma once

// Brute-force reference implementations for the test suite.  Everything here
// is deliberately naive and shares no search code with the library: subset
// enumeration, permutation expansion, plain Gaussian elimination.  Intended
// for matrices small enough that exponential cost does not matter.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semirank/bitvec.hpp"
#include "semirank/matrix.hpp"
#include "semirank/rational.hpp"

namespace testsupport {

using semirank::BinaryMatrix;
using semirank::BoolVector;
using semirank::Rational;

// Determinant by permutation expansion.
inline long long perm_det(const BinaryMatrix& m) {
    const std::size_t n = m.n_rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    long long det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        long long term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i)
            if (!m.at(i, perm[i])) term = 0;
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Rank by textbook rational Gaussian elimination.
inline std::size_t gauss_rank(const BinaryMatrix& m) {
    std::vector<std::vector<Rational>> a(m.n_rows(),
                                         std::vector<Rational>(m.n_cols()));
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            a[i][j] = Rational(m.at(i, j) ? 1 : 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.n_cols() && rank < m.n_rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.n_rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.n_rows()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = 0; i < m.n_rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.n_cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Rank over GF(2) with plain integer row masks.
inline std::size_t gf2_rank(const BinaryMatrix& m) {
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            if (m.at(i, j)) r |= std::uint64_t{1} << j;
        rows.push_back(r);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.n_cols(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot] >> col) & 1)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Rectangles as (row mask, column mask) pairs; matrices up to 16x16.

struct MaskRect {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    auto operator<=>(const MaskRect&) const = default;
};

inline std::uint32_t full_cols_for(const BinaryMatrix& x, std::uint32_t rowmask) {
    std::uint32_t common = (std::uint32_t{1} << x.n_cols()) - 1;
    for (std::size_t i = 0; i < x.n_rows(); ++i) {
        if (!((rowmask >> i) & 1)) continue;
        std::uint32_t r = 0;
        for (std::size_t j = 0; j < x.n_cols(); ++j)
            if (x.at(i, j)) r |= std::uint32_t{1} << j;
        common &= r;
    }
    return common;
}

// Every all-ones rectangle (nonempty row and column sets).
inline std::vector<MaskRect> all_rectangles(const BinaryMatrix& x) {
    std::vector<MaskRect> out;
    const std::uint32_t row_limit = std::uint32_t{1} << x.n_rows();
    for (std::uint32_t rm = 1; rm < row_limit; ++rm) {
        std::uint32_t common = full_cols_for(x, rm);
        // all nonempty submasks of common
        for (std::uint32_t cm = common; cm; cm = (cm - 1) & common)
            out.push_back({rm, cm});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Maximal rectangles via row-subset closure.
inline std::set<MaskRect> brute_maximal_rectangles(const BinaryMatrix& x) {
    std::set<MaskRect> out;
    const std::uint32_t row_limit = std::uint32_t{1} << x.n_rows();
    for (std::uint32_t rm = 1; rm < row_limit; ++rm) {
        std::uint32_t cols = full_cols_for(x, rm);
        if (!cols) continue;
        // close: all rows full on cols
        std::uint32_t rows = 0;
        for (std::size_t i = 0; i < x.n_rows(); ++i) {
            bool full = true;
            for (std::size_t j = 0; j < x.n_cols() && full; ++j)
                if (((cols >> j) & 1) && !x.at(i, j)) full = false;
            if (full) rows |= std::uint32_t{1} << i;
        }
        out.insert({rows, cols});
    }
    return out;
}

inline std::uint32_t rect_cellmask(const BinaryMatrix& x, MaskRect r) {
    std::uint32_t cells = 0;
    std::uint32_t bit = 0;
    for (std::size_t i = 0; i < x.n_rows(); ++i)
        for (std::size_t j = 0; j < x.n_cols(); ++j) {
            if (x.at(i, j)) {
                if (((r.rows >> i) & 1) && ((r.cols >> j) & 1)) cells |= 1u << bit;
                ++bit;
            }
        }
    return cells;
}

// Minimum rectangle-cover size by iterative deepening over ALL rectangles.
// With collect != nullptr, gathers every distinct minimum cover (as a set of
// rectangles) up to `cap` of them.
inline std::size_t brute_boolean_rank(const BinaryMatrix& x,
                                      std::vector<std::set<MaskRect>>* collect = nullptr,
                                      std::size_t cap = 4) {
    if (x.n_ones() == 0) {
        if (collect) collect->push_back({});
        return 0;
    }
    const std::vector<MaskRect> rects = all_rectangles(x);
    std::vector<std::uint32_t> cells;
    for (const MaskRect& r : rects) cells.push_back(rect_cellmask(x, r));
    const std::uint32_t all_cells = (std::uint32_t{1} << x.n_ones()) - 1;

    std::vector<std::size_t> chosen;
    std::set<std::set<MaskRect>> found;
    bool any = false;

    auto dfs = [&](auto&& self, std::uint32_t covered, std::size_t depth_left) -> bool {
        if (covered == all_cells) {
            any = true;
            if (collect) {
                std::set<MaskRect> cover;
                for (std::size_t idx : chosen) cover.insert(rects[idx]);
                found.insert(std::move(cover));
            }
            return true;
        }
        if (depth_left == 0) return false;
        if (collect && found.size() >= cap) return true;
        std::uint32_t first = covered + 1;
        first = ~covered & (covered + 1); // lowest uncovered cell bit
        bool hit = false;
        for (std::size_t idx = 0; idx < rects.size(); ++idx) {
            if (!(cells[idx] & first)) continue;
            chosen.push_back(idx);
            if (self(self, covered | cells[idx], depth_left - 1)) hit = true;
            chosen.pop_back();
            if (hit && !collect) return true;
            if (collect && found.size() >= cap) return true;
        }
        return hit;
    };

    for (std::size_t k = 1;; ++k) {
        any = false;
        found.clear();
        chosen.clear();
        dfs(dfs, 0, k);
        if (any) {
            if (collect) collect->assign(found.begin(), found.end());
            return k;
        }
    }
}

// Minimum exact partition size: like the cover search but candidate
// rectangles must stay inside the uncovered region.
inline std::size_t brute_binary_rank(const BinaryMatrix& x) {
    if (x.n_ones() == 0) return 0;
    std::vector<std::pair<std::size_t, std::size_t>> cell_at;
    for (std::size_t i = 0; i < x.n_rows(); ++i)
        for (std::size_t j = 0; j < x.n_cols(); ++j)
            if (x.at(i, j)) cell_at.emplace_back(i, j);
    const std::vector<MaskRect> rects = all_rectangles(x);
    std::vector<std::uint32_t> cells;
    for (const MaskRect& r : rects) cells.push_back(rect_cellmask(x, r));
    const std::uint32_t all_cells = (std::uint32_t{1} << x.n_ones()) - 1;

    std::size_t best = x.n_ones(); // singletons always work
    auto dfs = [&](auto&& self, std::uint32_t covered, std::size_t used) -> void {
        if (covered == all_cells) {
            best = std::min(best, used);
            return;
        }
        if (used + 1 >= best) return;
        std::uint32_t first = ~covered & (covered + 1);
        for (std::size_t idx = 0; idx < rects.size(); ++idx) {
            if (!(cells[idx] & first)) continue;
            if (cells[idx] & covered) continue; // must not overlap
            self(self, covered | cells[idx], used + 1);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

// Largest pairwise-isolated set of 1-cells by subset enumeration.
inline std::size_t brute_isolation(const BinaryMatrix& x) {
    std::vector<std::pair<std::size_t, std::size_t>> ones;
    for (std::size_t i = 0; i < x.n_rows(); ++i)
        for (std::size_t j = 0; j < x.n_cols(); ++j)
            if (x.at(i, j)) ones.emplace_back(i, j);
    const std::size_t v = ones.size();
    std::size_t best = 0;
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << v); ++sub) {
        std::vector<std::size_t> members;
        for (std::size_t a = 0; a < v; ++a)
            if ((sub >> a) & 1) members.push_back(a);
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) {
                auto [i, j] = ones[members[a]];
                auto [k, l] = ones[members[b]];
                if (x.at(i, l) && x.at(k, j)) ok = false;
            }
        if (ok) best = std::max(best, members.size());
    }
    return best;
}

// Cone closure by saturation: repeatedly OR elements with generators.
inline std::vector<BoolVector> brute_cone_elements(std::size_t dim,
                                                   const std::vector<BoolVector>& gens) {
    std::set<std::string> seen;
    std::vector<BoolVector> elements;
    BoolVector zero(dim);
    seen.insert(zero.to_string());
    elements.push_back(zero);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t snapshot = elements.size();
        for (std::size_t e = 0; e < snapshot; ++e)
            for (const BoolVector& g : gens) {
                BoolVector u = elements[e] | g;
                if (seen.insert(u.to_string()).second) {
                    elements.push_back(u);
                    grew = true;
                }
            }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

// All ORs of nonempty subsets pairwise distinct?
inline bool brute_independent(const std::vector<BoolVector>& s) {
    if (s.empty()) return true;
    std::set<std::string> seen;
    const std::uint32_t limit = std::uint32_t{1} << s.size();
    for (std::uint32_t sub = 1; sub < limit; ++sub) {
        BoolVector acc(s[0].size());
        for (std::size_t k = 0; k < s.size(); ++k)
            if ((sub >> k) & 1) acc |= s[k];
        if (!seen.insert(acc.to_string()).second) return false;
    }
    return true;
}

// Largest Boolean independent subset of the nonzero cone elements; the
// answer never exceeds the ambient dimension.
inline std::size_t brute_column_rank(const BinaryMatrix& x) {
    std::vector<BoolVector> gens;
    for (std::size_t j = 0; j < x.n_cols(); ++j) gens.push_back(x.column(j));
    std::vector<BoolVector> elements = brute_cone_elements(x.n_rows(), gens);
    std::vector<BoolVector> nonzero;
    for (const BoolVector& e : elements)
        if (e.any()) nonzero.push_back(e);
    const std::size_t hard_cap = std::min(nonzero.size(), x.n_rows());
    for (std::size_t k = hard_cap; k > 0; --k) {
        // all k-subsets
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (;;) {
            std::vector<BoolVector> sub;
            for (std::size_t i : idx) sub.push_back(nonzero[i]);
            if (brute_independent(sub)) return k;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == nonzero.size() - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Deterministic random inputs.

inline BinaryMatrix random_binary(std::mt19937& rng, std::size_t n, std::size_t m,
                                  double density) {
    BinaryMatrix x(n, m);
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (bit(rng)) x.set(i, j, true);
    return x;
}

inline BinaryMatrix from_bits(std::uint32_t bits, std::size_t n, std::size_t m) {
    BinaryMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if ((bits >> (i * m + j)) & 1) x.set(i, j, true);
    return x;
}

inline Rational random_positive_rational(std::mt19937& rng, int max_num = 7) {
    std::uniform_int_distribution<int> d(1, max_num);
    return semirank::make_rational(d(rng), d(rng));
}

} // namespace testsupport
