#pragma once

#include <optional>
#include <vector>

#include "semirank/matrix.hpp"
#include "semirank/rational.hpp"

namespace semirank {

/// Exact rational basis of {q : Wq = 0}.  dim = n_cols(W) - rank(W).
struct RationalNullBasis {
    std::size_t dim = 0;
    std::vector<std::vector<Rational>> basis;
};

RationalNullBasis null_space(const RationalMatrix& w);

/// Singleton test for {h >= 0 : Wh = X_i}, one verdict per column of X.
/// `solutions` holds one exact nonnegative solution per column.
struct UniqueHNonnegResult {
    bool unique = true;
    std::vector<char> per_column;
    std::vector<std::vector<Rational>> solutions;
};

/// Decides, for each column X_i, whether W h = X_i has exactly one
/// nonnegative solution.  Throws InfeasibleError (naming the 1-based column)
/// when some column has no nonnegative solution at all.
UniqueHNonnegResult unique_h_nonneg(const RationalMatrix& x, const RationalMatrix& w);
UniqueHNonnegResult unique_h_nonneg(const BinaryMatrix& x, const RationalMatrix& w);

namespace detail {

/// Phase-1 simplex over exact rationals with Bland's rule: finds x >= 0 with
/// Ax = b, or nothing when the system is infeasible.
std::optional<std::vector<Rational>>
solve_nonnegative(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b);

} // namespace detail

} // namespace semirank
