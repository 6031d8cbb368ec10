#include "semirank/rank_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "semirank/errors.hpp"

namespace semirank {

Factorization make_factorization(BinaryMatrix w, BinaryMatrix h, Semiring s) {
    Factorization f;
    f.inner_dim = w.n_cols();
    if (h.n_rows() != f.inner_dim)
        throw ShapeError("inner dimensions disagree: " + std::to_string(w.n_cols()) +
                         " vs " + std::to_string(h.n_rows()));
    f.w = std::move(w);
    f.h = std::move(h);
    f.semiring = s;
    return f;
}

Factorization make_factorization(RationalMatrix w, RationalMatrix h, Semiring s) {
    Factorization f;
    f.inner_dim = w.n_cols();
    if (h.n_rows() != f.inner_dim)
        throw ShapeError("inner dimensions disagree: " + std::to_string(w.n_cols()) +
                         " vs " + std::to_string(h.n_rows()));
    f.w = std::move(w);
    f.h = std::move(h);
    f.semiring = s;
    return f;
}

std::size_t factor_rows(const FactorMatrix& m) {
    return std::visit([](const auto& mat) { return mat.n_rows(); }, m);
}

std::size_t factor_cols(const FactorMatrix& m) {
    return std::visit([](const auto& mat) { return mat.n_cols(); }, m);
}

// ---------------------------------------------------------------------------
// Maximal rectangles: closed column sets of the rows-contain-columns relation,
// enumerated in lectic order (Ganter's NextClosure).

namespace {

std::vector<std::size_t> bits_to_indices(const BoolVector& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.push_back(i);
    return out;
}

} // namespace

std::vector<Rectangle> enumerate_maximal_rectangles(const BinaryMatrix& x) {
    std::vector<Rectangle> out;
    const std::size_t n = x.n_rows();
    const std::size_t m = x.n_cols();
    if (n == 0 || m == 0 || x.is_zero()) return out;

    const std::vector<BoolVector> supports = x.rows_as_vectors();

    auto rows_of = [&](const BoolVector& colset) {
        BoolVector rows(n);
        for (std::size_t i = 0; i < n; ++i)
            if (dominates(colset, supports[i])) rows.set(i, true);
        return rows;
    };
    auto cols_of = [&](const BoolVector& rowset) {
        BoolVector cols(m);
        for (std::size_t j = 0; j < m; ++j) cols.set(j, true);
        for (std::size_t i = 0; i < n; ++i)
            if (rowset.get(i)) cols = cols & supports[i];
        return cols;
    };
    auto closure = [&](const BoolVector& colset) { return cols_of(rows_of(colset)); };
    auto emit = [&](const BoolVector& colset) {
        if (colset.none()) return;
        BoolVector rows = rows_of(colset);
        if (rows.none()) return;
        out.push_back(Rectangle{bits_to_indices(rows), bits_to_indices(colset)});
    };

    BoolVector b = closure(BoolVector(m));
    emit(b);
    for (;;) {
        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (b.get(i)) {
                b.set(i, false);
                continue;
            }
            BoolVector cand = b;
            cand.set(i, true);
            BoolVector cl = closure(cand);
            bool canonical = true;
            for (std::size_t j = 0; j < i && canonical; ++j)
                if (cl.get(j) && !b.get(j)) canonical = false;
            if (canonical) {
                b = cl;
                emit(b);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Isolation number: exact maximum clique with a greedy-coloring bound.
// Vertices are the 1-cells; two cells are adjacent when no all-ones rectangle
// can contain both.  Cells sharing a row or column are never adjacent, so a
// clique has at most min(n, m) members.

namespace {

struct CliqueContext {
    const std::vector<BoolVector>* adj;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;
    detail::BudgetGauge* gauge;

    void color_sort(const BoolVector& p, std::vector<std::size_t>& order,
                    std::vector<std::size_t>& bound) const {
        std::vector<BoolVector> classes;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (!p.get(v)) continue;
            bool placed = false;
            for (std::size_t k = 0; k < classes.size(); ++k) {
                if ((classes[k] & (*adj)[v]).none()) {
                    classes[k].set(v, true);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.emplace_back(p.size());
                classes.back().set(v, true);
            }
        }
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t v = 0; v < p.size(); ++v)
                if (classes[k].get(v)) {
                    order.push_back(v);
                    bound.push_back(k + 1);
                }
    }

    void expand(BoolVector p) {
        if (!gauge->tick())
            throw ResourceError("isolation search budget exhausted");
        if (p.none()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<std::size_t> order, bound;
        color_sort(p, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + bound[idx] <= best.size()) return;
            std::size_t v = order[idx];
            current.push_back(v);
            expand(p & (*adj)[v]);
            current.pop_back();
            p.set(v, false);
        }
    }
};

} // namespace

IsolationResult isolation_number(const BinaryMatrix& x) {
    IsolationResult result;
    const auto cells = x.ones_cells();
    const std::size_t v_count = cells.size();
    if (v_count == 0) return result;

    std::vector<BoolVector> adj(v_count, BoolVector(v_count));
    for (std::size_t a = 0; a < v_count; ++a)
        for (std::size_t b = a + 1; b < v_count; ++b) {
            const auto [i, j] = cells[a];
            const auto [k, l] = cells[b];
            if (!x.at(i, l) || !x.at(k, j)) {
                adj[a].set(b, true);
                adj[b].set(a, true);
            }
        }

    SearchBudget unlimited;
    detail::BudgetGauge gauge(unlimited, 0);
    CliqueContext ctx;
    ctx.adj = &adj;
    ctx.gauge = &gauge;

    // Greedy start so the bound bites early.
    BoolVector chosen_mask(v_count);
    for (std::size_t v = 0; v < v_count; ++v) {
        if (dominates(chosen_mask, adj[v])) {
            ctx.best.push_back(v);
            chosen_mask.set(v, true);
        }
    }
    BoolVector all(v_count);
    for (std::size_t v = 0; v < v_count; ++v) all.set(v, true);
    ctx.expand(all);

    result.number = ctx.best.size();
    for (std::size_t v : ctx.best) result.witness.push_back(cells[v]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

// ---------------------------------------------------------------------------
// Shared helpers for the two rank searches.

namespace {

void check_size_guard(const BinaryMatrix& x, const SearchBudget& budget,
                      const char* what) {
    if (!budget.explicit_budget && (x.n_rows() > 12 || x.n_cols() > 12))
        throw ResourceError(std::string(what) + " accepts matrices up to 12x12 by " +
                            "default; pass an explicit node or time budget for " +
                            std::to_string(x.n_rows()) + "x" +
                            std::to_string(x.n_cols()));
}

ExactRankResult empty_rank_result(const BinaryMatrix& x, Semiring s) {
    ExactRankResult r;
    r.rank = 0;
    r.factorization = make_factorization(BinaryMatrix(x.n_rows(), 0),
                                         BinaryMatrix(0, x.n_cols()), s);
    return r;
}

/// Rectangle set -> factorization with W's columns sorted lexicographically
/// (ties broken by the H row).  W column k is the row indicator of rectangle
/// k, H row k its column indicator.
ExactRankResult build_witness(const BinaryMatrix& x, std::vector<Rectangle> rects,
                              Semiring s) {
    std::sort(rects.begin(), rects.end(),
              [&](const Rectangle& a, const Rectangle& b) {
                  BoolVector wa(x.n_rows()), wb(x.n_rows());
                  for (auto r : a.rows) wa.set(r, true);
                  for (auto r : b.rows) wb.set(r, true);
                  if (wa != wb) return wa < wb;
                  BoolVector ha(x.n_cols()), hb(x.n_cols());
                  for (auto c : a.cols) ha.set(c, true);
                  for (auto c : b.cols) hb.set(c, true);
                  return ha < hb;
              });
    BinaryMatrix w(x.n_rows(), rects.size());
    BinaryMatrix h(rects.size(), x.n_cols());
    for (std::size_t k = 0; k < rects.size(); ++k) {
        for (auto r : rects[k].rows) w.set(r, k, true);
        for (auto c : rects[k].cols) h.set(k, c, true);
    }
    ExactRankResult out;
    out.rank = rects.size();
    out.factorization = make_factorization(std::move(w), std::move(h), s);
    out.rectangles = std::move(rects);
    return out;
}

/// Greedy pairwise-isolated subset of the still-uncovered cells; every
/// rectangle covers at most one of them, so its size bounds the remaining
/// rectangles from below.
std::size_t greedy_isolated(const BoolVector& uncovered,
                            const std::vector<BoolVector>& adj) {
    BoolVector chosen(uncovered.size());
    std::size_t count = 0;
    for (std::size_t v = 0; v < uncovered.size(); ++v) {
        if (!uncovered.get(v)) continue;
        if (dominates(chosen, adj[v])) {
            chosen.set(v, true);
            ++count;
        }
    }
    return count;
}

std::vector<BoolVector> isolation_adjacency(
    const BinaryMatrix& x,
    const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
    std::vector<BoolVector> adj(cells.size(), BoolVector(cells.size()));
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            const auto [i, j] = cells[a];
            const auto [k, l] = cells[b];
            if (!x.at(i, l) || !x.at(k, j)) {
                adj[a].set(b, true);
                adj[b].set(a, true);
            }
        }
    return adj;
}

// ---------------------------------------------------------------------------
// Boolean rank: minimum cover of the 1-cells by maximal rectangles.

struct CoverSearch {
    const BinaryMatrix* x;
    std::vector<BoolVector> rect_masks;            // over compressed cell ids
    std::vector<std::vector<std::size_t>> cell_rects; // cell id -> rect indices
    std::vector<BoolVector> adj;
    std::size_t root_lb = 0;
    std::size_t best = 0;
    std::vector<std::size_t> best_set;
    std::size_t max_rect_cells = 1;
    detail::BudgetGauge* gauge;

    void dfs(const BoolVector& uncovered, std::vector<std::size_t>& chosen,
             std::vector<char>& banned) {
        if (!gauge->tick())
            throw BudgetExhausted("rectangle cover search budget exhausted",
                                  root_lb, best);
        if (uncovered.none()) {
            best = chosen.size();
            best_set = chosen;
            return;
        }
        std::size_t lb = greedy_isolated(uncovered, adj);
        std::size_t by_size = (uncovered.count() + max_rect_cells - 1) / max_rect_cells;
        lb = std::max(lb, by_size);
        if (chosen.size() + lb >= best) return;

        // Branch on the uncovered cell with the fewest usable rectangles.
        std::size_t branch_cell = uncovered.size();
        std::size_t fewest = SIZE_MAX;
        for (std::size_t v = 0; v < uncovered.size(); ++v) {
            if (!uncovered.get(v)) continue;
            std::size_t usable = 0;
            for (std::size_t r : cell_rects[v])
                if (!banned[r]) ++usable;
            if (usable < fewest) {
                fewest = usable;
                branch_cell = v;
                if (usable == 0) break;
            }
        }
        if (fewest == 0) return; // dead branch: the cell became uncoverable

        std::vector<std::size_t> candidates;
        for (std::size_t r : cell_rects[branch_cell])
            if (!banned[r]) candidates.push_back(r);

        // Each branch bans the rectangles tried before it, so every cover set
        // is visited exactly once.
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            std::size_t r = candidates[idx];
            chosen.push_back(r);
            BoolVector rest = uncovered;
            const auto& mask = rect_masks[r];
            for (std::size_t v = 0; v < rest.size(); ++v)
                if (mask.get(v)) rest.set(v, false);
            dfs(rest, chosen, banned);
            chosen.pop_back();
            banned[r] = 1;
        }
        for (std::size_t r : candidates) banned[r] = 0;
    }
};

// ---------------------------------------------------------------------------
// Binary rank: minimum exact partition of the 1-cells into rectangles.
// Rectangles of a minimum partition need not be maximal, so candidates are
// generated per node: all rectangles inside the uncovered region containing
// the first uncovered cell.

struct PartitionSearch {
    const BinaryMatrix* x;
    std::vector<std::pair<std::size_t, std::size_t>> cells; // compressed id -> (r, c)
    std::vector<std::vector<std::size_t>> cell_id;          // (r, c) -> id
    std::vector<BoolVector> adj;
    std::size_t root_lb = 0;
    std::size_t best = 0;
    std::vector<Rectangle> best_set;
    std::vector<Rectangle> chosen;
    std::size_t max_rect_cells = 1;
    detail::BudgetGauge* gauge;

    std::vector<BoolVector> uncovered_rows(const BoolVector& uncovered) const {
        std::vector<BoolVector> urow(x->n_rows(), BoolVector(x->n_cols()));
        for (std::size_t v = 0; v < uncovered.size(); ++v)
            if (uncovered.get(v)) urow[cells[v].first].set(cells[v].second, true);
        return urow;
    }

    std::vector<Rectangle> candidate_rects(const BoolVector& uncovered,
                                           std::size_t cell) {
        const std::size_t n = x->n_rows();
        const auto [r0, c0] = cells[cell];
        const std::vector<BoolVector> urow = uncovered_rows(uncovered);

        std::vector<std::size_t> avail_rows;
        for (std::size_t r = r0; r < n; ++r)
            if (urow[r].get(c0)) avail_rows.push_back(r);

        std::vector<Rectangle> out;
        std::vector<std::size_t> row_pick;
        // Recursive include/exclude over the available rows; r0 is forced.
        auto recurse = [&](auto&& self, std::size_t idx, BoolVector colmask) -> void {
            if (!colmask.get(c0)) return;
            if (idx == avail_rows.size()) {
                std::vector<std::size_t> colset = bits_to_indices(colmask);
                // Column subsets through c0; the other columns toggle freely.
                std::vector<std::size_t> optional_cols;
                for (std::size_t c : colset)
                    if (c != c0) optional_cols.push_back(c);
                if (optional_cols.size() > 25)
                    throw ResourceError(
                        "rectangle fan-out too large for the partition search");
                std::uint32_t limit = std::uint32_t{1} << optional_cols.size();
                for (std::uint32_t sub = 0; sub < limit; ++sub) {
                    if (!gauge->tick())
                        throw BudgetExhausted(
                            "rectangle partition search budget exhausted", root_lb,
                            best);
                    Rectangle rect;
                    rect.rows = row_pick;
                    rect.cols.push_back(c0);
                    for (std::size_t b = 0; b < optional_cols.size(); ++b)
                        if ((sub >> b) & 1u) rect.cols.push_back(optional_cols[b]);
                    std::sort(rect.cols.begin(), rect.cols.end());
                    out.push_back(std::move(rect));
                }
                return;
            }
            std::size_t r = avail_rows[idx];
            // include row r
            row_pick.push_back(r);
            self(self, idx + 1, colmask & urow[r]);
            row_pick.pop_back();
            // exclude row r (r0 can never be excluded)
            if (r != r0) self(self, idx + 1, colmask);
        };
        BoolVector full(x->n_cols());
        for (std::size_t c = 0; c < x->n_cols(); ++c) full.set(c, true);
        recurse(recurse, 0, full);

        std::sort(out.begin(), out.end(), [](const Rectangle& a, const Rectangle& b) {
            std::size_t sa = a.rows.size() * a.cols.size();
            std::size_t sb = b.rows.size() * b.cols.size();
            if (sa != sb) return sa > sb; // larger rectangles first
            return a < b;
        });
        return out;
    }

    /// Largest-area rectangle through the given cell found by greedy row
    /// growth.  Used only to seed the upper bound; never enumerates.
    Rectangle grow_rect(const BoolVector& uncovered, std::size_t cell) const {
        const std::size_t n = x->n_rows();
        const auto [r0, c0] = cells[cell];
        const std::vector<BoolVector> urow = uncovered_rows(uncovered);

        std::vector<std::size_t> rows{r0};
        BoolVector colmask = urow[r0];
        for (;;) {
            std::size_t best_area = rows.size() * colmask.count();
            std::size_t pick = n;
            BoolVector pick_mask(colmask.size());
            for (std::size_t r = r0 + 1; r < n; ++r) {
                if (!urow[r].get(c0)) continue;
                if (std::find(rows.begin(), rows.end(), r) != rows.end()) continue;
                BoolVector cand = colmask & urow[r];
                std::size_t area = (rows.size() + 1) * cand.count();
                if (area > best_area) {
                    best_area = area;
                    pick = r;
                    pick_mask = cand;
                }
            }
            if (pick == n) break;
            rows.push_back(pick);
            colmask = pick_mask;
        }
        std::sort(rows.begin(), rows.end());
        return Rectangle{std::move(rows), bits_to_indices(colmask)};
    }

    void dfs(const BoolVector& uncovered) {
        if (!gauge->tick())
            throw BudgetExhausted("rectangle partition search budget exhausted",
                                  root_lb, best);
        if (uncovered.none()) {
            best = chosen.size();
            best_set = chosen;
            return;
        }
        std::size_t lb = greedy_isolated(uncovered, adj);
        std::size_t by_size = (uncovered.count() + max_rect_cells - 1) / max_rect_cells;
        lb = std::max(lb, by_size);
        if (chosen.size() + lb >= best) return;

        std::size_t branch_cell = 0;
        while (!uncovered.get(branch_cell)) ++branch_cell;

        for (const Rectangle& rect : candidate_rects(uncovered, branch_cell)) {
            BoolVector rest = uncovered;
            for (std::size_t r : rect.rows)
                for (std::size_t c : rect.cols) rest.set(cell_id[r][c], false);
            chosen.push_back(rect);
            dfs(rest);
            chosen.pop_back();
        }
    }
};

} // namespace

ExactRankResult boolean_rank(const BinaryMatrix& x, const SearchBudget& budget) {
    check_size_guard(x, budget, "boolean_rank");
    if (x.is_zero()) return empty_rank_result(x, Semiring::Boolean);

    const auto cells = x.ones_cells();
    const std::size_t v_count = cells.size();
    std::vector<std::vector<std::size_t>> id(x.n_rows(),
                                             std::vector<std::size_t>(x.n_cols(), 0));
    for (std::size_t v = 0; v < v_count; ++v) id[cells[v].first][cells[v].second] = v;

    std::vector<Rectangle> rects = enumerate_maximal_rectangles(x);
    CoverSearch search;
    search.x = &x;
    search.adj = isolation_adjacency(x, cells);
    search.cell_rects.assign(v_count, {});
    for (std::size_t r = 0; r < rects.size(); ++r) {
        BoolVector mask(v_count);
        for (std::size_t i : rects[r].rows)
            for (std::size_t j : rects[r].cols) mask.set(id[i][j], true);
        search.max_rect_cells = std::max(search.max_rect_cells, mask.count());
        for (std::size_t v = 0; v < v_count; ++v)
            if (mask.get(v)) search.cell_rects[v].push_back(r);
        search.rect_masks.push_back(std::move(mask));
    }

    // Greedy cover for the initial upper bound (always succeeds: every 1-cell
    // lies in some maximal rectangle).
    std::vector<std::size_t> greedy;
    {
        BoolVector uncovered(v_count);
        for (std::size_t v = 0; v < v_count; ++v) uncovered.set(v, true);
        while (uncovered.any()) {
            std::size_t best_r = 0, best_gain = 0;
            for (std::size_t r = 0; r < rects.size(); ++r) {
                std::size_t gain = (search.rect_masks[r] & uncovered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_r = r;
                }
            }
            greedy.push_back(best_r);
            for (std::size_t v = 0; v < v_count; ++v)
                if (search.rect_masks[best_r].get(v)) uncovered.set(v, false);
        }
    }
    search.best = greedy.size();
    search.best_set = greedy;
    search.root_lb = isolation_number(x).number;

    if (search.best > search.root_lb) {
        detail::BudgetGauge gauge(budget, 0);
        search.gauge = &gauge;
        BoolVector uncovered(v_count);
        for (std::size_t v = 0; v < v_count; ++v) uncovered.set(v, true);
        std::vector<std::size_t> chosen;
        std::vector<char> banned(rects.size(), 0);
        search.dfs(uncovered, chosen, banned);
    }

    std::vector<Rectangle> witness;
    for (std::size_t r : search.best_set) witness.push_back(rects[r]);
    return build_witness(x, std::move(witness), Semiring::Boolean);
}

ExactRankResult binary_rank(const BinaryMatrix& x, const SearchBudget& budget) {
    check_size_guard(x, budget, "binary_rank");
    if (x.is_zero()) return empty_rank_result(x, Semiring::Binary);

    const auto cells = x.ones_cells();
    const std::size_t v_count = cells.size();

    PartitionSearch search;
    search.x = &x;
    search.cells = cells;
    search.cell_id.assign(x.n_rows(), std::vector<std::size_t>(x.n_cols(), 0));
    for (std::size_t v = 0; v < v_count; ++v)
        search.cell_id[cells[v].first][cells[v].second] = v;
    search.adj = isolation_adjacency(x, cells);
    for (const Rectangle& r : enumerate_maximal_rectangles(x))
        search.max_rect_cells =
            std::max(search.max_rect_cells, r.rows.size() * r.cols.size());

    // Greedy partition for the initial upper bound: repeatedly take a large
    // rectangle grown from the first uncovered cell.
    std::vector<Rectangle> greedy;
    {
        BoolVector uncovered(v_count);
        for (std::size_t v = 0; v < v_count; ++v) uncovered.set(v, true);
        while (uncovered.any()) {
            std::size_t cell = 0;
            while (!uncovered.get(cell)) ++cell;
            Rectangle pick = search.grow_rect(uncovered, cell);
            for (std::size_t r : pick.rows)
                for (std::size_t c : pick.cols)
                    uncovered.set(search.cell_id[r][c], false);
            greedy.push_back(std::move(pick));
        }
    }
    search.best = greedy.size();
    search.best_set = greedy;
    search.root_lb = std::max(isolation_number(x).number, rank_real(x).rank);

    if (search.best > search.root_lb) {
        detail::BudgetGauge gauge(budget, 0);
        search.gauge = &gauge;
        BoolVector uncovered(v_count);
        for (std::size_t v = 0; v < v_count; ++v) uncovered.set(v, true);
        search.dfs(uncovered);
    }

    return build_witness(x, std::move(search.best_set), Semiring::Binary);
}

BinaryMatrix threshold(const RationalMatrix& m) {
    BinaryMatrix out(m.n_rows(), m.n_cols());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j) {
            const Rational& q = m.at(i, j);
            if (q < 0)
                throw DomainError("negative entry " + rational_to_string(q) +
                                  " at (" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ") cannot be thresholded");
            if (q > 0) out.set(i, j, true);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization checking.

namespace {

BinaryMatrix factor_as_binary(const FactorMatrix& m, const char* which) {
    if (std::holds_alternative<BinaryMatrix>(m)) return std::get<BinaryMatrix>(m);
    const RationalMatrix& q = std::get<RationalMatrix>(m);
    if (!q.is_binary())
        throw DomainError(std::string(which) +
                          " has entries outside {0,1} for a binary-coefficient semiring");
    return q.to_binary();
}

RationalMatrix factor_as_rational(const FactorMatrix& m) {
    if (std::holds_alternative<RationalMatrix>(m)) return std::get<RationalMatrix>(m);
    return RationalMatrix::from_binary(std::get<BinaryMatrix>(m));
}

std::optional<std::pair<std::size_t, std::size_t>>
first_rational_mismatch(const BinaryMatrix& x, const RationalMatrix& product) {
    for (std::size_t i = 0; i < x.n_rows(); ++i)
        for (std::size_t j = 0; j < x.n_cols(); ++j) {
            Rational expect(x.at(i, j) ? 1 : 0);
            if (product.at(i, j) != expect) return std::make_pair(i, j);
        }
    return std::nullopt;
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>>
check_factorization(const BinaryMatrix& x, const Factorization& f) {
    if (factor_rows(f.w) != x.n_rows() || factor_cols(f.h) != x.n_cols())
        throw ShapeError("factor shapes " + std::to_string(factor_rows(f.w)) + "x" +
                         std::to_string(factor_cols(f.w)) + " * " +
                         std::to_string(factor_rows(f.h)) + "x" +
                         std::to_string(factor_cols(f.h)) + " do not produce " +
                         std::to_string(x.n_rows()) + "x" + std::to_string(x.n_cols()));
    if (factor_cols(f.w) != factor_rows(f.h) || factor_cols(f.w) != f.inner_dim)
        throw ShapeError("inner dimension mismatch");

    switch (f.semiring) {
        case Semiring::Real:
        case Semiring::Nonnegative: {
            RationalMatrix w = factor_as_rational(f.w);
            RationalMatrix h = factor_as_rational(f.h);
            if (f.semiring == Semiring::Nonnegative &&
                (!w.is_nonnegative() || !h.is_nonnegative()))
                throw DomainError("negative entry in a nonnegative factorization");
            return first_rational_mismatch(x, multiply(w, h));
        }
        case Semiring::Binary: {
            BinaryMatrix w = factor_as_binary(f.w, "W");
            BinaryMatrix h = factor_as_binary(f.h, "H");
            for (std::size_t i = 0; i < x.n_rows(); ++i)
                for (std::size_t j = 0; j < x.n_cols(); ++j) {
                    std::size_t sum = 0;
                    for (std::size_t k = 0; k < f.inner_dim; ++k)
                        if (w.at(i, k) && h.at(k, j)) ++sum;
                    if (sum != (x.at(i, j) ? 1u : 0u)) return std::make_pair(i, j);
                }
            return std::nullopt;
        }
        case Semiring::Z2:
        case Semiring::Boolean: {
            BinaryMatrix w = factor_as_binary(f.w, "W");
            BinaryMatrix h = factor_as_binary(f.h, "H");
            const bool boolean = f.semiring == Semiring::Boolean;
            for (std::size_t i = 0; i < x.n_rows(); ++i) {
                BoolVector acc(x.n_cols());
                for (std::size_t k = 0; k < f.inner_dim; ++k) {
                    if (!w.at(i, k)) continue;
                    if (boolean)
                        acc |= h.row(k);
                    else
                        acc ^= h.row(k);
                }
                BoolVector expect = x.row(i);
                if (acc != expect) {
                    for (std::size_t j = 0; j < x.n_cols(); ++j)
                        if (acc.get(j) != expect.get(j)) return std::make_pair(i, j);
                }
            }
            return std::nullopt;
        }
    }
    throw DomainError("unknown semiring tag");
}

bool verify_factorization(const BinaryMatrix& x, const Factorization& f) {
    return !check_factorization(x, f).has_value();
}

namespace {

void require_nonneg_witness(const BinaryMatrix& x, const Factorization& witness) {
    if (witness.semiring != Semiring::Nonnegative)
        throw VerificationError("nonnegative-rank witness must be tagged nonneg");
    auto bad = check_factorization(x, witness);
    if (bad)
        throw VerificationError("nonnegative-rank witness fails at cell (" +
                                std::to_string(bad->first + 1) + ", " +
                                std::to_string(bad->second + 1) + ")");
}

NonnegBounds assemble_nonneg_bounds(std::size_t rank_real_value,
                                    std::size_t rank_boolean,
                                    std::size_t rank_binary,
                                    const std::optional<Factorization>& witness) {
    NonnegBounds out;
    out.lo = std::max(rank_real_value, rank_boolean);
    out.lo_source = rank_boolean > rank_real_value ? "boolean_rank" : "rank_real";
    out.hi = rank_binary;
    out.hi_source = "binary_rank";
    if (witness && witness->inner_dim < out.hi) {
        out.hi = witness->inner_dim;
        out.hi_source = "witness";
    }
    out.exact = out.lo == out.hi;
    return out;
}

} // namespace

NonnegBounds nonneg_rank_bounds(const BinaryMatrix& x,
                                const std::optional<Factorization>& witness,
                                const SearchBudget& budget) {
    if (witness) require_nonneg_witness(x, *witness);
    std::size_t rr = rank_real(x).rank;
    std::size_t rb = boolean_rank(x, budget).rank;
    std::size_t rbin = binary_rank(x, budget).rank;
    return assemble_nonneg_bounds(rr, rb, rbin, witness);
}

RankReport rank_report(const BinaryMatrix& x, const RankSelection& select,
                       const std::optional<Factorization>& nonneg_witness,
                       const SearchBudget& budget,
                       std::map<std::string, std::int64_t>* timings_us) {
    RankReport report;

    auto timed = [&](const char* name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            if (!timings_us) return;
            auto elapsed = std::chrono::steady_clock::now() - start;
            (*timings_us)[name] =
                std::chrono::duration_cast<std::chrono::microseconds>(elapsed)
                    .count();
        };
        try {
            auto value = fn();
            finish();
            return value;
        } catch (...) {
            finish();
            throw;
        }
    };

    if (select.real || select.nonneg)
        report.real = timed("rank_real", [&] { return rank_real(x); });
    if (select.z2) report.z2 = timed("rank_z2", [&] { return rank_z2(x); });

    auto guarded = [&](const char* name, auto&& fn, auto& slot) {
        try {
            slot = timed(name, fn);
        } catch (const ResourceError& e) {
            report.not_computed.emplace_back(name, e.what());
        }
    };
    if (select.boolean_ || select.nonneg)
        guarded("boolean_rank", [&] { return boolean_rank(x, budget); },
                report.boolean_);
    if (select.binary || select.nonneg)
        guarded("binary_rank", [&] { return binary_rank(x, budget); }, report.binary);
    if (select.isolation)
        guarded("isolation", [&] { return isolation_number(x); }, report.isolation);

    if (select.nonneg) {
        if (report.boolean_ && report.binary) {
            report.nonneg = timed("nonneg_bounds", [&] {
                if (nonneg_witness) require_nonneg_witness(x, *nonneg_witness);
                return assemble_nonneg_bounds(report.real->rank,
                                              report.boolean_->rank,
                                              report.binary->rank, nonneg_witness);
            });
        } else {
            report.not_computed.emplace_back(
                "nonneg_bounds", "requires the boolean and binary ranks, which "
                                 "were not computed within the budget");
        }
        if (!select.real) report.real.reset();
    }
    if (select.nonneg && !select.boolean_) report.boolean_.reset();
    if (select.nonneg && !select.binary) report.binary.reset();

    return report;
}

} // namespace semirank
