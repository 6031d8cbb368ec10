#include "semirank/uniqueness.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "semirank/rank_search.hpp"

namespace semirank {

namespace {

/// Nonzero vectors dominated by at least one column, sorted lexicographically.
std::vector<BoolVector> census_candidates(const BinaryMatrix& x,
                                          const SearchBudget& budget) {
    const std::size_t n = x.n_rows();
    std::unordered_set<BoolVector, BoolVectorHash> seen;
    std::vector<BoolVector> pool;
    for (std::size_t j = 0; j < x.n_cols(); ++j) {
        BoolVector col = x.column(j);
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (col.get(i)) support.push_back(i);
        if (support.size() > budget.cone_enumeration_limit)
            throw ResourceError("census candidate pool exceeds 2^" +
                                std::to_string(budget.cone_enumeration_limit) +
                                " for column " + std::to_string(j + 1));
        const std::uint64_t limit = std::uint64_t{1} << support.size();
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            BoolVector v(n);
            for (std::size_t b = 0; b < support.size(); ++b)
                if ((mask >> b) & 1u) v.set(support[b], true);
            if (seen.insert(v).second) pool.push_back(std::move(v));
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

/// OR of the members of g dominated by target; equality with target decides
/// span membership.
bool in_span(const BoolVector& target, const std::vector<BoolVector>& g,
             std::size_t skip = SIZE_MAX) {
    BoolVector acc(target.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == skip) continue;
        if (dominates(g[i], target)) acc |= g[i];
    }
    return acc == target;
}

} // namespace

ConeCensus cone_census(const BinaryMatrix& x, std::size_t r,
                       const SearchBudget& budget) {
    ExactRankResult rank = boolean_rank(x, budget);
    if (r != rank.rank)
        throw DomainError("census order " + std::to_string(r) +
                          " must equal the boolean rank " +
                          std::to_string(rank.rank));

    ConeCensus census;
    census.target_order = r;
    if (r == 0) {
        // The zero matrix is contained only in the trivial cone.
        census.cones.push_back({});
        return census;
    }

    const std::vector<BoolVector> pool = census_candidates(x, budget);
    const std::vector<BoolVector> columns = x.columns_as_vectors();

    detail::BudgetGauge gauge(budget, 50'000'000);
    std::vector<std::size_t> pick;

    auto dfs = [&](auto&& self, std::size_t next) -> void {
        if (!gauge.tick()) {
            census.exhausted = false;
            throw CensusBudgetError("cone census budget exhausted", census);
        }
        if (pick.size() == r) {
            std::vector<BoolVector> g;
            for (std::size_t idx : pick) g.push_back(pool[idx]);
            for (const BoolVector& col : columns)
                if (!in_span(col, g)) return;
            // Minimality: no generator may lie in the span of the others.
            for (std::size_t i = 0; i < g.size(); ++i)
                if (in_span(g[i], g, i)) return;
            census.cones.push_back(std::move(g));
            return;
        }
        if (pool.size() - next < r - pick.size()) return;
        for (std::size_t i = next; i < pool.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    dfs(dfs, 0);
    // Candidates are sorted, so each generator set emerges sorted and the
    // census arrives in lexicographic order already.
    return census;
}

std::pair<bool, ConeCensus> unique_w_boolean(const BinaryMatrix& x,
                                             const SearchBudget& budget) {
    ExactRankResult rank = boolean_rank(x, budget);
    ConeCensus census = cone_census(x, rank.rank, budget);
    return {census.cones.size() == 1 && census.exhausted, census};
}

UniqueHBooleanResult unique_h_boolean(const BinaryMatrix& x, const BinaryMatrix& w) {
    if (x.n_rows() != w.n_rows())
        throw ShapeError("data and generator matrices have different row counts");
    const std::size_t r = w.n_cols();
    const std::vector<BoolVector> w_cols = w.columns_as_vectors();

    UniqueHBooleanResult result;
    result.canonical_h = BinaryMatrix(r, x.n_cols());
    for (std::size_t i = 0; i < x.n_cols(); ++i) {
        BoolVector xi = x.column(i);
        std::vector<std::size_t> p = dominated_generators(xi, w);
        BoolVector acc(x.n_rows());
        for (std::size_t k : p) acc |= w_cols[k];
        if (acc != xi)
            throw DomainError("column " + std::to_string(i + 1) +
                              " is not an OR of the given generators");
        for (std::size_t k : p) result.canonical_h.set(k, i, true);

        // The mixing is unique iff S -> OR(S) is injective over all subsets
        // of P, the empty set included: no zero generator, and the nonempty
        // ORs pairwise distinct.
        std::vector<BoolVector> pv;
        bool has_zero = false;
        for (std::size_t k : p) {
            if (w_cols[k].none()) has_zero = true;
            pv.push_back(w_cols[k]);
        }
        bool ok = !has_zero && boolean_independent(pv);
        result.per_column.push_back(ok ? 1 : 0);
        if (!ok) {
            result.unique = false;
            result.offending_columns.push_back(i);
        }
    }
    return result;
}

std::vector<std::size_t> count_h_solutions(const BinaryMatrix& x,
                                           const BinaryMatrix& w,
                                           const SearchBudget& budget) {
    if (x.n_rows() != w.n_rows())
        throw ShapeError("data and generator matrices have different row counts");
    const std::size_t r = w.n_cols();
    if (r > budget.mixing_limit)
        throw ResourceError("mixing enumeration limited to " +
                            std::to_string(budget.mixing_limit) + " generators");
    const std::vector<BoolVector> w_cols = w.columns_as_vectors();

    std::vector<std::size_t> counts(x.n_cols(), 0);
    const std::uint64_t limit = std::uint64_t{1} << r;
    for (std::uint64_t h = 0; h < limit; ++h) {
        BoolVector acc(x.n_rows());
        for (std::size_t k = 0; k < r; ++k)
            if ((h >> k) & 1u) acc |= w_cols[k];
        for (std::size_t i = 0; i < x.n_cols(); ++i)
            if (acc == x.column(i)) ++counts[i];
    }
    return counts;
}

bool boundary_close(const BinaryMatrix& w) {
    const std::vector<BoolVector> cols = w.columns_as_vectors();
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (i == j) continue;
            // Need a row with 1 at i, 0 at j: column i must not be dominated.
            if (dominates(cols[i], cols[j])) return false;
        }
    return true;
}

UniquenessReport uniqueness_report(const BinaryMatrix& x, const SearchBudget& budget,
                                   std::map<std::string, std::int64_t>* timings_us,
                                   ConeCensus* census_out) {
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

    UniquenessReport report;
    ExactRankResult rank = timed("boolean_rank", [&] { return boolean_rank(x, budget); });
    report.boolean_rank = rank.rank;
    report.boolean_column_rank = timed("boolean_column_rank", [&] {
        return boolean_column_rank(x, ColumnRankMode::FullCone, budget);
    });

    ConeCensus census =
        timed("cone_census", [&] { return cone_census(x, rank.rank, budget); });
    report.cone_census_size = census.cones.size();
    report.census_exhausted = census.exhausted;
    report.unique_w = census.cones.size() == 1 && census.exhausted;

    // A rank factorization always induces an order-rk_B cone, so the census
    // is never empty here.
    report.w_generators = census.cones.front();
    report.w_is_representative = !report.unique_w;
    if (census_out) *census_out = std::move(census);

    BinaryMatrix w = BinaryMatrix::from_column_vectors(report.w_generators, x.n_rows());
    UniqueHBooleanResult h =
        timed("unique_h", [&] { return unique_h_boolean(x, w); });
    report.unique_h_given_w = h.unique;
    report.h_offending_columns = h.offending_columns;
    report.boundary_close_w = boundary_close(w);

    report.fully_unique = report.boolean_column_rank == report.boolean_rank
                              ? report.unique_w
                              : (report.unique_w && report.unique_h_given_w);
    return report;
}

} // namespace semirank
