#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semirank/budget.hpp"
#include "semirank/field_ranks.hpp"
#include "semirank/matrix.hpp"
#include "semirank/rational.hpp"

namespace semirank {

/// All-ones submatrix, given by its (nonempty, strictly increasing, 0-based)
/// row and column index sets.
struct Rectangle {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    bool operator==(const Rectangle& other) const {
        return rows == other.rows && cols == other.cols;
    }
    bool operator<(const Rectangle& other) const {
        if (rows != other.rows) return rows < other.rows;
        return cols < other.cols;
    }
};

/// Either factor of a factorization: binary or exact rational.
using FactorMatrix = std::variant<BinaryMatrix, RationalMatrix>;

/// A claimed factorization X = W * H over the tagged semiring.
struct Factorization {
    FactorMatrix w;
    FactorMatrix h;
    Semiring semiring = Semiring::Boolean;
    std::size_t inner_dim = 0;
};

Factorization make_factorization(BinaryMatrix w, BinaryMatrix h, Semiring s);
Factorization make_factorization(RationalMatrix w, RationalMatrix h, Semiring s);

std::size_t factor_rows(const FactorMatrix& m);
std::size_t factor_cols(const FactorMatrix& m);

/// All inclusion-maximal all-ones submatrices, sorted by row set then column
/// set.  The zero matrix has none.
std::vector<Rectangle> enumerate_maximal_rectangles(const BinaryMatrix& x);

/// Result of an exact rank search: the rank, a verifying witness
/// factorization (columns of W in lexicographic order), and the rectangles
/// the witness was assembled from.
struct ExactRankResult {
    std::size_t rank = 0;
    Factorization factorization;
    std::vector<Rectangle> rectangles;
};

/// Minimum number of all-ones rectangles whose union is exactly the 1-cells
/// (Boolean rank).  Branch and bound over maximal rectangles; lower bounds
/// come from the isolation number and a greedy pairwise-uncoverable set.
ExactRankResult boolean_rank(const BinaryMatrix& x, const SearchBudget& budget = {});

/// Minimum number of all-ones rectangles partitioning the 1-cells (the rank
/// over {0,1} with real addition).  Rectangles of a partition need not be
/// maximal, so candidates are generated lazily per branching cell.
ExactRankResult binary_rank(const BinaryMatrix& x, const SearchBudget& budget = {});

/// Largest set of 1-cells no two of which fit in one all-ones rectangle
/// (cells (i,j), (k,l) with x[i,l] * x[k,j] = 0).  Exact maximum clique on
/// the isolation graph; a certified lower bound for the Boolean rank.
struct IsolationResult {
    std::size_t number = 0;
    std::vector<std::pair<std::size_t, std::size_t>> witness; // 0-based cells
};

IsolationResult isolation_number(const BinaryMatrix& x);

/// Entrywise map: positive -> 1, zero -> 0.  Negative entries are a domain
/// error.  Applied to both factors of a nonnegative factorization it yields
/// a Boolean factorization of the same binary matrix.
BinaryMatrix threshold(const RationalMatrix& m);

/// First cell where the product of the factors differs from x, or nullopt if
/// the factorization is exact over its semiring (0-based cell).
std::optional<std::pair<std::size_t, std::size_t>>
check_factorization(const BinaryMatrix& x, const Factorization& f);

bool verify_factorization(const BinaryMatrix& x, const Factorization& f);

/// Exact bracket on the nonnegative rank:
///   lo = max(rank over the rationals, Boolean rank)
///   hi = min(binary rank, inner dimension of a verified witness if given).
struct NonnegBounds {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool exact = false;
    std::string lo_source;
    std::string hi_source;
};

NonnegBounds nonneg_rank_bounds(const BinaryMatrix& x,
                                const std::optional<Factorization>& witness = {},
                                const SearchBudget& budget = {});

/// Which analyses rank_report should run.
struct RankSelection {
    bool real = false;
    bool z2 = false;
    bool boolean_ = false;
    bool binary = false;
    bool nonneg = false;
    bool isolation = false;

    static RankSelection all() { return {true, true, true, true, true, true}; }
};

/// Aggregated rank analysis.  Every computed value carries its witness; a
/// field a budget or limit prevented is listed in not_computed with the
/// reason instead of a value.
struct RankReport {
    std::optional<FieldRankResult> real;
    std::optional<FieldRankResult> z2;
    std::optional<ExactRankResult> boolean_;
    std::optional<ExactRankResult> binary;
    std::optional<NonnegBounds> nonneg;
    std::optional<IsolationResult> isolation;
    std::vector<std::pair<std::string, std::string>> not_computed;
};

/// When timings_us is given, per-analysis wall times land there in integer
/// microseconds, keyed by analysis name.
RankReport rank_report(const BinaryMatrix& x,
                       const RankSelection& select = RankSelection::all(),
                       const std::optional<Factorization>& nonneg_witness = {},
                       const SearchBudget& budget = {},
                       std::map<std::string, std::int64_t>* timings_us = nullptr);

} // namespace semirank
