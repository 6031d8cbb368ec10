#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "semirank/bitvec.hpp"
#include "semirank/budget.hpp"
#include "semirank/matrix.hpp"

namespace semirank {

/// Subset of {0,1}^n closed under entrywise OR and containing the zero
/// vector, described by a generating set.
///
/// Generators are deduplicated, stripped of the zero vector and kept in
/// lexicographic order.  The full element set is materialized lazily under a
/// configurable generator limit and cached with single-assignment semantics:
/// concurrent readers observe either no cache or the complete sorted set.
class BooleanCone {
public:
    BooleanCone(std::size_t ambient_dim, std::vector<BoolVector> generators);

    static BooleanCone from_columns(const BinaryMatrix& w);

    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<BoolVector>& generators() const { return generators_; }

    /// Membership without enumeration: x is in the cone iff the OR of all
    /// generators dominated by x equals x.
    bool contains(const BoolVector& x) const;

    bool elements_cached() const;

    /// All elements (zero vector included), sorted lexicographically.
    /// Materializes on first use; refuses more than `limit` generators.
    const std::vector<BoolVector>& elements(std::size_t limit = 20) const;

private:
    struct ElementCache {
        std::once_flag once;
        std::vector<BoolVector> sorted;
        bool ready = false;
    };

    std::size_t ambient_dim_ = 0;
    std::vector<BoolVector> generators_;
    std::shared_ptr<ElementCache> cache_;
};

/// Cone spanned by the columns of w, with its element set materialized.
BooleanCone cone_elements(const BinaryMatrix& w, const SearchBudget& budget = {});

/// The unique minimal generating set: the nonzero elements y for which the
/// OR of all strictly dominated elements falls short of y.  Sorted
/// lexicographically; spans the cone and is contained in every generating set.
std::vector<BoolVector> minimal_generators(const BooleanCone& cone,
                                           const SearchBudget& budget = {});

/// Size of the minimal generating set.
std::size_t cone_order(const BooleanCone& cone, const SearchBudget& budget = {});

/// True iff all 2^|s| - 1 non-empty-subset ORs of the collection are
/// distinct.  The input is an indexed collection: duplicates make it
/// dependent.  Early-exits on the first collision.
bool boolean_independent(const std::vector<BoolVector>& s,
                         const SearchBudget& budget = {});

enum class ColumnRankMode {
    FullCone,    ///< search subsets of the whole element set of cone(x)
    ColumnsOnly, ///< search subsets of the column list only
};

/// Largest Boolean independent subset of cone(x) (or of the columns of x in
/// ColumnsOnly mode).  The zero vector is never a useful member of an
/// independent set alongside anything else, and counting the singleton {0}
/// would break the rank comparison on the zero matrix, so candidates are the
/// nonzero elements.
std::size_t boolean_column_rank(const BinaryMatrix& x,
                                ColumnRankMode mode = ColumnRankMode::FullCone,
                                const SearchBudget& budget = {});

/// 0-based indices of the columns of w dominated by x, ascending.
std::vector<std::size_t> dominated_generators(const BoolVector& x,
                                              const BinaryMatrix& w);

} // namespace semirank
