#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semirank/rank_search.hpp"
#include "semirank/uniqueness.hpp"

namespace semirank {

/// Payload of the verify command.
struct VerifyOutcome {
    std::string semiring;
    bool verified = false;
    std::optional<std::pair<std::size_t, std::size_t>> mismatch; // 0-based
};

/// Cross-check of unique_h_given_w against brute-force mixing counts.
struct OracleCheck {
    std::vector<std::size_t> mixing_counts;
    bool agrees = false;
};

/// Payload of the cone command.
struct ConeSummary {
    std::size_t ambient_dim = 0;
    std::size_t generator_count = 0;
    std::vector<BoolVector> elements;
    std::vector<BoolVector> minimal;
};

/// Everything one invocation reports.  JSON serialization round-trips: a
/// document parsed back from its own JSON serializes identically.
struct ReportDocument {
    std::string input_path;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0.0;
    bool budget_explicit = false;
    std::map<std::string, std::int64_t> timings_us;
    std::optional<RankReport> ranks;
    std::optional<UniquenessReport> uniqueness;
    std::optional<ConeCensus> census;
    std::optional<OracleCheck> oracle;
    std::optional<VerifyOutcome> verify;
    std::optional<ConeSummary> cone;
};

using nlohmann::json;

// All indices are 1-based on the JSON side, 0-based in the structs.
void to_json(json& j, const FieldRankResult& r);
void from_json(const json& j, FieldRankResult& r);
void to_json(json& j, const Factorization& f);
void from_json(const json& j, Factorization& f);
void to_json(json& j, const ExactRankResult& r);
void from_json(const json& j, ExactRankResult& r);
void to_json(json& j, const IsolationResult& r);
void from_json(const json& j, IsolationResult& r);
void to_json(json& j, const NonnegBounds& b);
void from_json(const json& j, NonnegBounds& b);
void to_json(json& j, const RankReport& r);
void from_json(const json& j, RankReport& r);
void to_json(json& j, const ConeCensus& c);
void from_json(const json& j, ConeCensus& c);
void to_json(json& j, const UniquenessReport& r);
void from_json(const json& j, UniquenessReport& r);
void to_json(json& j, const VerifyOutcome& v);
void from_json(const json& j, VerifyOutcome& v);
void to_json(json& j, const OracleCheck& o);
void from_json(const json& j, OracleCheck& o);
void to_json(json& j, const ConeSummary& c);
void from_json(const json& j, ConeSummary& c);
void to_json(json& j, const ReportDocument& d);
void from_json(const json& j, ReportDocument& d);

/// Human-readable rendering; every numeric JSON field shows up here too.
std::string render_text(const ReportDocument& doc);

} // namespace semirank
