#include "semirank/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semirank/boolean_cone.hpp"
#include "semirank/errors.hpp"
#include "semirank/nonneg.hpp"
#include "semirank/report.hpp"

namespace semirank {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const ReportDocument& doc, bool json_mode) {
    if (json_mode)
        std::cout << json(doc).dump(2) << "\n";
    else
        std::cout << render_text(doc);
}

ReportDocument base_document(const std::string& path, const SearchBudget& budget) {
    ReportDocument doc;
    doc.input_path = path;
    doc.budget_nodes = budget.max_nodes;
    doc.budget_seconds = budget.max_seconds;
    doc.budget_explicit = budget.explicit_budget;
    return doc;
}

struct RankFlags {
    bool all = false;
    bool real = false;
    bool z2 = false;
    bool boolean_ = false;
    bool binary = false;
    bool nonneg = false;
    bool isolation = false;
    std::string witness_w;
    std::string witness_h;
};

int do_rank(const std::string& path, const RankFlags& flags,
            const SearchBudget& budget, bool json_mode) {
    BinaryMatrix x = parse_matrix(read_file(path));
    ReportDocument doc = base_document(path, budget);
    doc.n_rows = x.n_rows();
    doc.n_cols = x.n_cols();

    RankSelection sel{};
    sel.real = flags.real;
    sel.z2 = flags.z2;
    sel.boolean_ = flags.boolean_;
    sel.binary = flags.binary;
    sel.nonneg = flags.nonneg;
    sel.isolation = flags.isolation;
    const bool any = flags.real || flags.z2 || flags.boolean_ || flags.binary ||
                     flags.nonneg || flags.isolation;
    if (flags.all || !any) sel = RankSelection::all();

    std::optional<Factorization> witness;
    if (!flags.witness_w.empty()) {
        RationalMatrix w = parse_rational_matrix(read_file(flags.witness_w));
        RationalMatrix h = parse_rational_matrix(read_file(flags.witness_h));
        witness = make_factorization(std::move(w), std::move(h),
                                     Semiring::Nonnegative);
    }

    doc.ranks = rank_report(x, sel, witness, budget, &doc.timings_us);
    emit(doc, json_mode);
    if (!doc.ranks->not_computed.empty()) {
        for (const auto& [field, reason] : doc.ranks->not_computed)
            std::cerr << "budget: " << field << ": " << reason << "\n";
        return 3;
    }
    return 0;
}

int do_unique(const std::string& path, bool with_census, bool with_oracle,
              const SearchBudget& budget, bool json_mode) {
    BinaryMatrix x = parse_matrix(read_file(path));
    ReportDocument doc = base_document(path, budget);
    doc.n_rows = x.n_rows();
    doc.n_cols = x.n_cols();

    try {
        ConeCensus census;
        doc.uniqueness = uniqueness_report(x, budget, &doc.timings_us, &census);
        if (with_census) doc.census = std::move(census);
    } catch (const CensusBudgetError& e) {
        // Partial verdict: the ranks are cheap relative to the census that
        // just timed out, so recompute them for the document.
        UniquenessReport partial;
        partial.boolean_rank = boolean_rank(x, budget).rank;
        partial.boolean_column_rank =
            boolean_column_rank(x, ColumnRankMode::FullCone, budget);
        partial.cone_census_size = e.partial.cones.size();
        partial.census_exhausted = false;
        doc.uniqueness = partial;
        doc.census = e.partial;
        emit(doc, json_mode);
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    }

    if (with_oracle) {
        BinaryMatrix w = BinaryMatrix::from_column_vectors(
            doc.uniqueness->w_generators, x.n_rows());
        OracleCheck oracle;
        oracle.mixing_counts = count_h_solutions(x, w, budget);
        const bool all_one =
            std::all_of(oracle.mixing_counts.begin(), oracle.mixing_counts.end(),
                        [](std::size_t c) { return c == 1; });
        oracle.agrees = all_one == doc.uniqueness->unique_h_given_w;
        doc.oracle = oracle;
    }

    emit(doc, json_mode);
    return 0;
}

int do_verify(const std::string& x_path, const std::string& w_path,
              const std::string& h_path, const std::string& tag,
              const SearchBudget& budget, bool json_mode) {
    Semiring s = semiring_from_string(tag);
    BinaryMatrix x = parse_matrix(read_file(x_path));
    RationalMatrix w = parse_rational_matrix(read_file(w_path));
    RationalMatrix h = parse_rational_matrix(read_file(h_path));

    Factorization f;
    if (s == Semiring::Real || s == Semiring::Nonnegative)
        f = make_factorization(std::move(w), std::move(h), s);
    else
        f = make_factorization(w.to_binary(), h.to_binary(), s);

    ReportDocument doc = base_document(x_path, budget);
    doc.n_rows = x.n_rows();
    doc.n_cols = x.n_cols();

    auto start = std::chrono::steady_clock::now();
    auto mismatch = check_factorization(x, f);
    doc.timings_us["verify"] = std::chrono::duration_cast<std::chrono::microseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();

    VerifyOutcome outcome;
    outcome.semiring = to_string(s);
    outcome.verified = !mismatch.has_value();
    outcome.mismatch = mismatch;
    doc.verify = outcome;
    emit(doc, json_mode);
    return outcome.verified ? 0 : 1;
}

int do_cone(const std::string& path, const SearchBudget& budget, bool json_mode) {
    BinaryMatrix generators = parse_matrix(read_file(path));
    ReportDocument doc = base_document(path, budget);
    doc.n_rows = generators.n_rows();
    doc.n_cols = generators.n_cols();

    auto start = std::chrono::steady_clock::now();
    BooleanCone cone = cone_elements(generators, budget);
    ConeSummary summary;
    summary.ambient_dim = generators.n_rows();
    summary.generator_count = generators.n_cols();
    summary.elements = cone.elements(budget.cone_enumeration_limit);
    summary.minimal = minimal_generators(cone, budget);
    doc.timings_us["cone"] = std::chrono::duration_cast<std::chrono::microseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    doc.cone = std::move(summary);
    emit(doc, json_mode);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact rank and factorization-uniqueness analysis for 0/1 matrices"};
    app.require_subcommand(1);

    bool json_mode = false;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0.0;
    app.add_flag("--json", json_mode, "emit JSON instead of text");
    CLI::Option* nodes_opt = app.add_option(
        "--budget-nodes", budget_nodes, "search node budget (lifts the size guard)");
    CLI::Option* seconds_opt = app.add_option(
        "--budget-seconds", budget_seconds, "search time budget in seconds");

    RankFlags rank_flags;
    std::string rank_path;
    CLI::App* rank_cmd = app.add_subcommand("rank", "compute matrix ranks");
    rank_cmd->fallthrough();
    rank_cmd->add_option("file", rank_path, "0/1 matrix file")->required();
    rank_cmd->add_flag("--all", rank_flags.all, "all analyses (default)");
    rank_cmd->add_flag("--real", rank_flags.real, "rank over the rationals");
    rank_cmd->add_flag("--z2", rank_flags.z2, "rank over GF(2)");
    rank_cmd->add_flag("--boolean", rank_flags.boolean_, "Boolean rank");
    rank_cmd->add_flag("--binary", rank_flags.binary, "binary rank");
    rank_cmd->add_flag("--nonneg", rank_flags.nonneg, "nonnegative rank bounds");
    rank_cmd->add_flag("--isolation", rank_flags.isolation, "isolation number");
    CLI::Option* ww = rank_cmd->add_option("--witness-w", rank_flags.witness_w,
                                           "nonnegative witness W (rational)");
    CLI::Option* wh = rank_cmd->add_option("--witness-h", rank_flags.witness_h,
                                           "nonnegative witness H (rational)");
    ww->needs(wh);
    wh->needs(ww);

    std::string unique_path;
    bool with_census = false, with_oracle = false;
    CLI::App* unique_cmd =
        app.add_subcommand("unique", "factorization uniqueness analysis");
    unique_cmd->fallthrough();
    unique_cmd->add_option("file", unique_path, "0/1 matrix file")->required();
    unique_cmd->add_flag("--census", with_census, "list all censused cones");
    unique_cmd->add_flag("--oracle", with_oracle,
                         "cross-check unique H against mixing counts");

    std::string verify_x, verify_w, verify_h, verify_tag;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check X = W*H over a chosen semiring");
    verify_cmd->fallthrough();
    verify_cmd->add_option("x_file", verify_x, "0/1 data matrix")->required();
    verify_cmd->add_option("w_file", verify_w, "left factor")->required();
    verify_cmd->add_option("h_file", verify_h, "right factor")->required();
    verify_cmd
        ->add_option("--semiring", verify_tag,
                     "one of real, nonneg, binary, z2, boolean")
        ->required();

    std::string cone_path;
    CLI::App* cone_cmd =
        app.add_subcommand("cone", "elements and minimal generators of a cone");
    cone_cmd->fallthrough();
    cone_cmd->add_option("file", cone_path, "generator matrix (columns generate)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    SearchBudget budget;
    if (nodes_opt->count() > 0) {
        budget.max_nodes = budget_nodes;
        budget.explicit_budget = true;
    } else if (const char* env = std::getenv("SEMIRING_RANK_BUDGET_NODES")) {
        try {
            budget.max_nodes = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "SEMIRING_RANK_BUDGET_NODES is not a number: " << env
                      << "\n";
            return 2;
        }
        budget.explicit_budget = true;
    }
    if (seconds_opt->count() > 0) {
        budget.max_seconds = budget_seconds;
        budget.explicit_budget = true;
    }

    try {
        if (rank_cmd->parsed())
            return do_rank(rank_path, rank_flags, budget, json_mode);
        if (unique_cmd->parsed())
            return do_unique(unique_path, with_census, with_oracle, budget,
                             json_mode);
        if (verify_cmd->parsed())
            return do_verify(verify_x, verify_w, verify_h, verify_tag, budget,
                             json_mode);
        if (cone_cmd->parsed()) return do_cone(cone_path, budget, json_mode);
        std::cerr << "no command selected\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget: " << e.what() << " (proved lower bound "
                  << e.lower_bound;
        if (e.upper_bound != SIZE_MAX)
            std::cerr << ", best found " << e.upper_bound;
        std::cerr << ")\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace semirank
