#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semirank/boolean_cone.hpp"
#include "semirank/budget.hpp"
#include "semirank/errors.hpp"
#include "semirank/matrix.hpp"

namespace semirank {

/// All cones of a fixed order whose span contains every column of the source
/// matrix.  Each cone is identified by its minimal generating set, stored
/// lexicographically sorted; the cone list itself is sorted too.
struct ConeCensus {
    std::size_t target_order = 0;
    std::vector<std::vector<BoolVector>> cones;
    bool exhausted = true;
};

/// Census enumeration ran out of budget; `partial` holds what was found so
/// far with exhausted = false.
struct CensusBudgetError : ResourceError {
    ConeCensus partial;
    CensusBudgetError(const std::string& what, ConeCensus p)
        : ResourceError(what), partial(std::move(p)) {}
};

/// Enumerates every order-r cone containing all columns of x.  Requires
/// r == boolean_rank(x); generator candidates are the nonzero vectors
/// dominated by some column (complete at the rank: an undominated generator
/// is unused by every column, so dropping it would beat the rank).
ConeCensus cone_census(const BinaryMatrix& x, std::size_t r,
                       const SearchBudget& budget = {});

/// True iff exactly one order-rk_B cone contains all columns (census of
/// size 1, exhaustively enumerated).
std::pair<bool, ConeCensus> unique_w_boolean(const BinaryMatrix& x,
                                             const SearchBudget& budget = {});

struct UniqueHBooleanResult {
    bool unique = true;
    std::vector<char> per_column;
    std::vector<std::size_t> offending_columns; // 0-based
    BinaryMatrix canonical_h;                   // maximal H; the H when unique
};

/// For each column X_i, decides whether exactly one mixing h yields
/// X_i = W ∧ h: the dominated generators P(X_i, W) must be Boolean
/// independent and zero-free, making subset ORs injective.  Throws
/// DomainError naming the first column outside cone(W).
UniqueHBooleanResult unique_h_boolean(const BinaryMatrix& x, const BinaryMatrix& w);

/// Brute-force mixing counts: for each column X_i, the number of h in B^R
/// with W ∧ h = X_i, over all 2^R mixings.
std::vector<std::size_t> count_h_solutions(const BinaryMatrix& x,
                                           const BinaryMatrix& w,
                                           const SearchBudget& budget = {});

/// True iff for every ordered pair i != j some row has 1 at column i and 0
/// at column j; equivalently no column dominates another.
bool boundary_close(const BinaryMatrix& w);

struct UniquenessReport {
    std::size_t boolean_rank = 0;
    std::size_t boolean_column_rank = 0;
    bool unique_w = false;
    std::size_t cone_census_size = 0;
    bool census_exhausted = true;
    std::vector<BoolVector> w_generators;  // lex-smallest censused cone
    bool w_is_representative = false;      // true when that cone is not unique
    bool unique_h_given_w = false;
    std::vector<std::size_t> h_offending_columns; // 0-based
    bool boundary_close_w = false;
    bool fully_unique = false;
};

/// Combined verdict: unique_w via the census; unique_h against the censused
/// generators; when boolean_column_rank equals boolean_rank the overall
/// verdict collapses to unique_w alone.  Optional sinks receive the full
/// census and per-analysis wall times in integer microseconds.
UniquenessReport uniqueness_report(const BinaryMatrix& x,
                                   const SearchBudget& budget = {},
                                   std::map<std::string, std::int64_t>* timings_us = nullptr,
                                   ConeCensus* census_out = nullptr);

} // namespace semirank
