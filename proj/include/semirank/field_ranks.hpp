#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "semirank/matrix.hpp"

namespace semirank {

/// Rank together with a pivot certificate: the submatrix on (pivot_rows,
/// pivot_cols) has a nonzero determinant over the field in question.
/// Pivot columns are strictly increasing; pivot rows are listed in the order
/// the columns were processed.
struct FieldRankResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination
/// on exact integers.  Pivots: first column with a nonzero entry, lowest
/// original row index on ties.
FieldRankResult rank_real(const BinaryMatrix& m);

/// Rank over GF(2), computed by word-parallel elimination on the packed rows.
/// Same deterministic pivot rule.
FieldRankResult rank_z2(const BinaryMatrix& m);

/// Exact integer determinant of a square matrix (fraction-free elimination).
mpz_class det_int(const BinaryMatrix& m);

/// Determinant over GF(2) of a square matrix; equals det_int mod 2.
int det_z2(const BinaryMatrix& m);

} // namespace semirank
