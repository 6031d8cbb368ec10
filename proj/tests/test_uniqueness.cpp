#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "semirank/boolean_cone.hpp"
#include "semirank/rank_search.hpp"
#include "semirank/uniqueness.hpp"

using namespace semirank;
using testsupport::brute_cone_elements;
using testsupport::from_bits;
using testsupport::random_binary;

namespace {

const BinaryMatrix A = BinaryMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
const BinaryMatrix C = BinaryMatrix::from_rows(
    {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
// four columns whose span is reconstructible but whose mixings are not
const BinaryMatrix U = BinaryMatrix::from_rows(
    {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}});

std::vector<std::string> gen_strings(const std::vector<BoolVector>& gens) {
    std::vector<std::string> out;
    for (const BoolVector& g : gens) out.push_back(g.to_string());
    return out;
}

// exhaustive check that a censused cone really contains every column
bool spans_columns(const BinaryMatrix& x, const std::vector<BoolVector>& gens) {
    BooleanCone cone(x.n_rows(), gens);
    for (std::size_t j = 0; j < x.n_cols(); ++j)
        if (!cone.contains(x.column(j))) return false;
    return true;
}

} // namespace

TEST_SUITE("uniqueness") {

TEST_CASE("census of the double-cover square") {
    // two distinct minimal cone structures at the rank: the four columns,
    // and the four standard basis vectors
    ExactRankResult rb = boolean_rank(C);
    REQUIRE(rb.rank == 4);
    ConeCensus census = cone_census(C, 4);
    CHECK(census.exhausted);
    REQUIRE(census.cones.size() == 2);
    CHECK(std::is_sorted(census.cones.begin(), census.cones.end()));
    CHECK(gen_strings(census.cones[0]) ==
          std::vector<std::string>{"0001", "0010", "0100", "1000"});
    CHECK(gen_strings(census.cones[1]) ==
          std::vector<std::string>{"0011", "0101", "1010", "1100"});

    auto [unique, cen2] = unique_w_boolean(C);
    CHECK_FALSE(unique);
    CHECK(cen2.cones.size() == 2);
}

TEST_CASE("census soundness invariants on small random matrices") {
    std::mt19937 rng(501);
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<std::size_t> rows(1, 4);
        std::uniform_int_distribution<std::size_t> cols(1, 4);
        std::uniform_real_distribution<double> dens(0.15, 0.95);
        BinaryMatrix x = random_binary(rng, rows(rng), cols(rng), dens(rng));
        std::size_t r = boolean_rank(x).rank;
        ConeCensus census = cone_census(x, r);
        CHECK(census.exhausted);
        CHECK(census.target_order == r);
        // never empty at the rank: the rank factorization itself yields one
        CHECK(census.cones.size() >= 1);
        std::set<std::vector<std::string>> distinct;
        for (const auto& gens : census.cones) {
            CHECK(gens.size() == r);
            CHECK(spans_columns(x, gens));
            // stored generating set is the minimal one of its own span
            BooleanCone cone(x.n_rows(), gens);
            CHECK(minimal_generators(cone) == gens);
            distinct.insert(gen_strings(gens));
        }
        CHECK(distinct.size() == census.cones.size());
    }
}

TEST_CASE("census rejects a mismatched target order") {
    CHECK_THROWS_AS(cone_census(C, 3), DomainError);
    CHECK_THROWS_AS(cone_census(C, 5), DomainError);
}

TEST_CASE("census of degenerate matrices") {
    ConeCensus zero = cone_census(BinaryMatrix(3, 3), 0);
    CHECK(zero.cones.size() == 1);
    CHECK(zero.cones[0].empty());

    ConeCensus empty = cone_census(BinaryMatrix(), 0);
    CHECK(empty.cones.size() == 1);

    ConeCensus ident = cone_census(BinaryMatrix::identity(4), 4);
    REQUIRE(ident.cones.size() == 1);
    CHECK(gen_strings(ident.cones[0]) ==
          std::vector<std::string>{"0001", "0010", "0100", "1000"});
}

TEST_CASE("census budget exhaustion carries a partial result") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    tiny.explicit_budget = true;
    try {
        cone_census(C, 4, tiny);
        FAIL("census finished under a one-node budget");
    } catch (const CensusBudgetError& e) {
        CHECK_FALSE(e.partial.exhausted);
        CHECK(e.partial.target_order == 4);
        CHECK(e.partial.cones.size() <= 2);
    }
}

TEST_CASE("mixing uniqueness per column") {
    // mixing the columns of U: the all-ones column is an OR in three ways
    UniqueHBooleanResult res = unique_h_boolean(U, submatrix(U, {0, 1, 2, 3}, {0, 1, 2}));
    CHECK_FALSE(res.unique);
    REQUIRE(res.per_column.size() == 4);
    CHECK(res.per_column[0]);
    CHECK(res.per_column[1]);
    CHECK(res.per_column[2]);
    CHECK_FALSE(res.per_column[3]);
    CHECK(res.offending_columns == std::vector<std::size_t>{3});

    // the complement-of-identity matrix mixed over itself is rigid
    UniqueHBooleanResult ra = unique_h_boolean(A, A);
    CHECK(ra.unique);
    CHECK(ra.canonical_h == BinaryMatrix::identity(3));

    // every matrix is rigid over the identity
    std::mt19937 rng(503);
    BinaryMatrix x = random_binary(rng, 4, 5, 0.5);
    UniqueHBooleanResult ri = unique_h_boolean(x, BinaryMatrix::identity(4));
    CHECK(ri.unique);
    CHECK(ri.canonical_h == x);

    // a column outside the span is a domain error naming the column
    BinaryMatrix w = BinaryMatrix::from_rows({{1}, {0}});
    BinaryMatrix bad = BinaryMatrix::from_rows({{0}, {1}});
    try {
        unique_h_boolean(bad, w);
        FAIL("off-span column accepted");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
}

TEST_CASE("canonical mixing is maximal and correct") {
    std::mt19937 rng(509);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t n = dim(rng), r = dim(rng), m = dim(rng);
        BinaryMatrix w = random_binary(rng, n, r, 0.55);
        // build X from random mixings so every column lies in the span
        BinaryMatrix h(r, m);
        std::bernoulli_distribution pick(0.5);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < m; ++j)
                if (pick(rng)) h.set(k, j, true);
        BinaryMatrix x(n, m);
        for (std::size_t j = 0; j < m; ++j) {
            BoolVector acc(n);
            for (std::size_t k = 0; k < r; ++k)
                if (h.at(k, j)) acc |= w.column(k);
            for (std::size_t i = 0; i < n; ++i)
                if (acc.get(i)) x.set(i, j, true);
        }

        UniqueHBooleanResult res = unique_h_boolean(x, w);
        // canonical H reproduces X over the Boolean semiring
        CHECK(verify_factorization(
            x, make_factorization(w, res.canonical_h, Semiring::Boolean)));
        // and it dominates every valid mixing, the chosen one included
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < m; ++j)
                if (h.at(k, j) && dominates(w.column(k), x.column(j)))
                    CHECK(res.canonical_h.at(k, j));

        // verdicts match the brute mixing counts
        std::vector<std::size_t> counts = count_h_solutions(x, w);
        REQUIRE(counts.size() == m);
        bool all_single = true;
        for (std::size_t j = 0; j < m; ++j) {
            CHECK(counts[j] >= 1);
            CHECK(res.per_column[j] == (counts[j] == 1));
            if (counts[j] != 1) all_single = false;
        }
        CHECK(res.unique == all_single);
    }
}

TEST_CASE("mixing counts") {
    std::vector<std::size_t> cu = count_h_solutions(U, submatrix(U, {0, 1, 2, 3}, {0, 1, 2}));
    CHECK(cu == std::vector<std::size_t>{1, 1, 1, 3});

    // a vector outside the span has count zero
    BinaryMatrix w = BinaryMatrix::from_rows({{1}, {0}});
    BinaryMatrix off = BinaryMatrix::from_rows({{0}, {1}});
    CHECK(count_h_solutions(off, w) == std::vector<std::size_t>{0});

    // the zero column is made only by the empty mixing when W has no zero column
    BinaryMatrix z(2, 1);
    CHECK(count_h_solutions(z, w) == std::vector<std::size_t>{1});
    // ... and by two mixings when it does
    BinaryMatrix wz(2, 2);
    wz.set(0, 0, true);
    CHECK(count_h_solutions(z, wz) == std::vector<std::size_t>{2});

    // too many generator columns for the 2^R sweep
    CHECK_THROWS_AS(count_h_solutions(BinaryMatrix(2, 1), BinaryMatrix(2, 21)),
                    ResourceError);
}

TEST_CASE("boundary closeness") {
    CHECK(boundary_close(submatrix(U, {0, 1, 2, 3}, {0, 1, 2})));
    CHECK(boundary_close(BinaryMatrix::identity(3)));
    CHECK_FALSE(boundary_close(BinaryMatrix::ones(2, 2)));   // equal columns
    CHECK_FALSE(boundary_close(U));                          // column 4 dominates
    CHECK(boundary_close(BinaryMatrix(3, 0)));
    CHECK(boundary_close(BinaryMatrix()));
    // a zero column is dominated by every other column
    BinaryMatrix wz(2, 2);
    wz.set(0, 0, true);
    CHECK_FALSE(boundary_close(wz));
}

TEST_CASE("full report on the flagship example") {
    std::map<std::string, std::int64_t> timings;
    ConeCensus census;
    UniquenessReport rep = uniqueness_report(U, {}, &timings, &census);
    CHECK(rep.boolean_rank == 3);
    CHECK(rep.boolean_column_rank == 2);
    CHECK(rep.unique_w);
    CHECK(rep.cone_census_size == 1);
    CHECK(rep.census_exhausted);
    CHECK(gen_strings(rep.w_generators) ==
          std::vector<std::string>{"0111", "1001", "1100"});
    CHECK_FALSE(rep.w_is_representative); // the censused cone is the only one
    CHECK_FALSE(rep.unique_h_given_w);
    CHECK(rep.h_offending_columns == std::vector<std::size_t>{3});
    CHECK(rep.boundary_close_w);
    CHECK_FALSE(rep.fully_unique); // crk < rank, so both checks must pass
    REQUIRE(census.cones.size() == 1);
    CHECK(census.cones[0] == rep.w_generators);
    for (const char* key :
         {"boolean_rank", "boolean_column_rank", "cone_census", "unique_h"})
        CHECK(timings.count(key) == 1);
}

TEST_CASE("report on further named examples") {
    // the complement of the identity factors through its own columns AND
    // through the identity, so the span is not unique
    UniquenessReport ra = uniqueness_report(A);
    CHECK(ra.boolean_rank == 3);
    CHECK(ra.boolean_column_rank == 2);
    CHECK_FALSE(ra.unique_w);
    CHECK(ra.cone_census_size == 2);
    CHECK(gen_strings(ra.w_generators) ==
          std::vector<std::string>{"001", "010", "100"});
    CHECK(ra.unique_h_given_w); // over the identity, H = A itself
    CHECK_FALSE(ra.fully_unique);

    UniquenessReport rc = uniqueness_report(C);
    CHECK(rc.boolean_rank == 4);
    CHECK(rc.boolean_column_rank == 2);
    CHECK_FALSE(rc.unique_w);
    CHECK(rc.cone_census_size == 2);
    CHECK(rc.w_is_representative); // lex-smallest of two
    CHECK(gen_strings(rc.w_generators) ==
          std::vector<std::string>{"0001", "0010", "0100", "1000"});
    CHECK_FALSE(rc.fully_unique);

    UniquenessReport ri = uniqueness_report(BinaryMatrix::identity(4));
    CHECK(ri.boolean_rank == 4);
    CHECK(ri.boolean_column_rank == 4);
    CHECK(ri.unique_w);
    CHECK(ri.unique_h_given_w);
    // crk == rank: the verdict collapses to span uniqueness
    CHECK(ri.fully_unique);

    UniquenessReport rz = uniqueness_report(BinaryMatrix(2, 3));
    CHECK(rz.boolean_rank == 0);
    CHECK(rz.cone_census_size == 1);
    CHECK(rz.unique_w);
    CHECK(rz.unique_h_given_w);
    CHECK(rz.fully_unique);
}

TEST_CASE("span uniqueness forces boundary closeness") {
    // whenever the span is unique, its minimal generators are boundary close
    std::mt19937 rng(521);
    int seen_unique = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<std::size_t> rows(2, 4);
        std::uniform_int_distribution<std::size_t> cols(2, 4);
        std::uniform_real_distribution<double> dens(0.2, 0.9);
        BinaryMatrix x = random_binary(rng, rows(rng), cols(rng), dens(rng));
        auto [unique, census] = unique_w_boolean(x);
        if (!unique) continue;
        ++seen_unique;
        BinaryMatrix w = BinaryMatrix::from_column_vectors(census.cones[0], x.n_rows());
        CHECK(boundary_close(w));
    }
    CHECK(seen_unique > 10); // the sample actually exercised the property
}

TEST_CASE("exhaustive 3x3 consistency between report and direct calls") {
    for (std::uint32_t bits = 0; bits < 512; bits += 7) {
        BinaryMatrix x = from_bits(bits, 3, 3);
        UniquenessReport rep = uniqueness_report(x);
        CHECK(rep.boolean_rank == boolean_rank(x).rank);
        CHECK(rep.boolean_column_rank == boolean_column_rank(x));
        auto [unique, census] = unique_w_boolean(x);
        CHECK(rep.unique_w == unique);
        CHECK(rep.cone_census_size == census.cones.size());
        if (rep.boolean_rank > 0) {
            BinaryMatrix w =
                BinaryMatrix::from_column_vectors(rep.w_generators, x.n_rows());
            UniqueHBooleanResult uh = unique_h_boolean(x, w);
            CHECK(rep.unique_h_given_w == uh.unique);
            CHECK(rep.boundary_close_w == boundary_close(w));
        }
        if (rep.boolean_column_rank == rep.boolean_rank)
            CHECK(rep.fully_unique == rep.unique_w);
        else
            CHECK(rep.fully_unique == (rep.unique_w && rep.unique_h_given_w));
        if (rep.fully_unique) CHECK(rep.unique_w);
    }
}

} // TEST_SUITE
