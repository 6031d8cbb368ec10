#include "semirank/report.hpp"

#include <sstream>

#include "semirank/errors.hpp"

namespace semirank {

namespace {

json indices_1based(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (std::size_t i : v) arr.push_back(i + 1);
    return arr;
}

std::vector<std::size_t> indices_0based(const json& arr) {
    std::vector<std::size_t> out;
    for (const auto& e : arr) {
        std::size_t v = e.get<std::size_t>();
        if (v == 0) throw FormatError("indices in JSON are 1-based; found 0");
        out.push_back(v - 1);
    }
    return out;
}

BoolVector bv_from_string(const std::string& s) {
    BoolVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw FormatError("bit vector strings may contain only 0 and 1");
    }
    return v;
}

json binary_to_json(const BinaryMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n_cols(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

BinaryMatrix binary_from_json(const json& rows, std::size_t cols_hint) {
    std::vector<std::vector<int>> data;
    for (const auto& row : rows) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(e.get<int>());
        data.push_back(std::move(r));
    }
    if (data.empty()) return BinaryMatrix(0, cols_hint);
    return BinaryMatrix::from_rows(data);
}

json rational_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix rational_from_json(const json& rows, std::size_t cols_hint) {
    std::vector<std::vector<Rational>> data;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
        data.push_back(std::move(r));
    }
    if (data.empty()) return RationalMatrix(0, cols_hint);
    return RationalMatrix::from_rows(data);
}

json bvs_to_json(const std::vector<BoolVector>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(v.to_string());
    return arr;
}

std::vector<BoolVector> bvs_from_json(const json& arr) {
    std::vector<BoolVector> out;
    for (const auto& e : arr) out.push_back(bv_from_string(e.get<std::string>()));
    return out;
}

} // namespace

void to_json(json& j, const FieldRankResult& r) {
    j = json{{"rank", r.rank},
             {"pivot_rows", indices_1based(r.pivot_rows)},
             {"pivot_cols", indices_1based(r.pivot_cols)}};
}

void from_json(const json& j, FieldRankResult& r) {
    r.rank = j.at("rank").get<std::size_t>();
    r.pivot_rows = indices_0based(j.at("pivot_rows"));
    r.pivot_cols = indices_0based(j.at("pivot_cols"));
}

void to_json(json& j, const Factorization& f) {
    const bool binary = std::holds_alternative<BinaryMatrix>(f.w);
    j = json{{"kind", binary ? "binary" : "rational"},
             {"semiring", to_string(f.semiring)},
             {"inner_dim", f.inner_dim}};
    if (binary) {
        j["w"] = binary_to_json(std::get<BinaryMatrix>(f.w));
        j["h"] = binary_to_json(std::get<BinaryMatrix>(f.h));
    } else {
        j["w"] = rational_to_json(std::get<RationalMatrix>(f.w));
        j["h"] = rational_to_json(std::get<RationalMatrix>(f.h));
    }
}

void from_json(const json& j, Factorization& f) {
    const std::string kind = j.at("kind").get<std::string>();
    f.semiring = semiring_from_string(j.at("semiring").get<std::string>());
    f.inner_dim = j.at("inner_dim").get<std::size_t>();
    if (kind == "binary") {
        f.w = binary_from_json(j.at("w"), f.inner_dim);
        f.h = binary_from_json(j.at("h"), 0);
    } else if (kind == "rational") {
        f.w = rational_from_json(j.at("w"), f.inner_dim);
        f.h = rational_from_json(j.at("h"), 0);
    } else {
        throw FormatError("factorization kind must be binary or rational");
    }
}

void to_json(json& j, const ExactRankResult& r) {
    j = json{{"rank", r.rank}, {"witness", r.factorization}};
}

void from_json(const json& j, ExactRankResult& r) {
    r.rank = j.at("rank").get<std::size_t>();
    r.factorization = j.at("witness").get<Factorization>();
    r.rectangles.clear();
}

void to_json(json& j, const IsolationResult& r) {
    json cells = json::array();
    for (const auto& [a, b] : r.witness) cells.push_back(json::array({a + 1, b + 1}));
    j = json{{"number", r.number}, {"witness", std::move(cells)}};
}

void from_json(const json& j, IsolationResult& r) {
    r.number = j.at("number").get<std::size_t>();
    r.witness.clear();
    for (const auto& cell : j.at("witness"))
        r.witness.emplace_back(cell.at(0).get<std::size_t>() - 1,
                               cell.at(1).get<std::size_t>() - 1);
}

void to_json(json& j, const NonnegBounds& b) {
    j = json{{"lo", b.lo},
             {"hi", b.hi},
             {"exact", b.exact},
             {"lo_source", b.lo_source},
             {"hi_source", b.hi_source}};
}

void from_json(const json& j, NonnegBounds& b) {
    b.lo = j.at("lo").get<std::size_t>();
    b.hi = j.at("hi").get<std::size_t>();
    b.exact = j.at("exact").get<bool>();
    b.lo_source = j.at("lo_source").get<std::string>();
    b.hi_source = j.at("hi_source").get<std::string>();
}

void to_json(json& j, const RankReport& r) {
    j = json::object();
    if (r.real) j["rk_real"] = *r.real;
    if (r.z2) j["rk_z2"] = *r.z2;
    if (r.boolean_) j["rk_boolean"] = *r.boolean_;
    if (r.binary) j["rk_binary"] = *r.binary;
    if (r.nonneg) j["rk_nonneg"] = *r.nonneg;
    if (r.isolation) j["isolation"] = *r.isolation;
    if (!r.not_computed.empty()) {
        json arr = json::array();
        for (const auto& [field, reason] : r.not_computed)
            arr.push_back(json{{"field", field}, {"reason", reason}});
        j["not_computed"] = std::move(arr);
    }
}

void from_json(const json& j, RankReport& r) {
    r = RankReport{};
    if (j.contains("rk_real")) r.real = j.at("rk_real").get<FieldRankResult>();
    if (j.contains("rk_z2")) r.z2 = j.at("rk_z2").get<FieldRankResult>();
    if (j.contains("rk_boolean")) r.boolean_ = j.at("rk_boolean").get<ExactRankResult>();
    if (j.contains("rk_binary")) r.binary = j.at("rk_binary").get<ExactRankResult>();
    if (j.contains("rk_nonneg")) r.nonneg = j.at("rk_nonneg").get<NonnegBounds>();
    if (j.contains("isolation")) r.isolation = j.at("isolation").get<IsolationResult>();
    if (j.contains("not_computed"))
        for (const auto& e : j.at("not_computed"))
            r.not_computed.emplace_back(e.at("field").get<std::string>(),
                                        e.at("reason").get<std::string>());
}

void to_json(json& j, const ConeCensus& c) {
    json cones = json::array();
    for (const auto& cone : c.cones) cones.push_back(bvs_to_json(cone));
    j = json{{"target_order", c.target_order},
             {"exhausted", c.exhausted},
             {"cones", std::move(cones)}};
}

void from_json(const json& j, ConeCensus& c) {
    c.target_order = j.at("target_order").get<std::size_t>();
    c.exhausted = j.at("exhausted").get<bool>();
    c.cones.clear();
    for (const auto& cone : j.at("cones")) c.cones.push_back(bvs_from_json(cone));
}

void to_json(json& j, const UniquenessReport& r) {
    j = json{{"boolean_rank", r.boolean_rank},
             {"boolean_column_rank", r.boolean_column_rank},
             {"unique_w", r.unique_w},
             {"cone_census_size", r.cone_census_size},
             {"census_exhausted", r.census_exhausted},
             {"w_generators", bvs_to_json(r.w_generators)},
             {"w_is_representative", r.w_is_representative},
             {"unique_h_given_w", r.unique_h_given_w},
             {"h_offending_columns", indices_1based(r.h_offending_columns)},
             {"boundary_close", r.boundary_close_w},
             {"fully_unique", r.fully_unique}};
}

void from_json(const json& j, UniquenessReport& r) {
    r.boolean_rank = j.at("boolean_rank").get<std::size_t>();
    r.boolean_column_rank = j.at("boolean_column_rank").get<std::size_t>();
    r.unique_w = j.at("unique_w").get<bool>();
    r.cone_census_size = j.at("cone_census_size").get<std::size_t>();
    r.census_exhausted = j.at("census_exhausted").get<bool>();
    r.w_generators = bvs_from_json(j.at("w_generators"));
    r.w_is_representative = j.at("w_is_representative").get<bool>();
    r.unique_h_given_w = j.at("unique_h_given_w").get<bool>();
    r.h_offending_columns = indices_0based(j.at("h_offending_columns"));
    r.boundary_close_w = j.at("boundary_close").get<bool>();
    r.fully_unique = j.at("fully_unique").get<bool>();
}

void to_json(json& j, const VerifyOutcome& v) {
    j = json{{"semiring", v.semiring}, {"verified", v.verified}};
    if (v.mismatch)
        j["mismatch"] = json::array({v.mismatch->first + 1, v.mismatch->second + 1});
}

void from_json(const json& j, VerifyOutcome& v) {
    v.semiring = j.at("semiring").get<std::string>();
    v.verified = j.at("verified").get<bool>();
    v.mismatch.reset();
    if (j.contains("mismatch"))
        v.mismatch = std::make_pair(j.at("mismatch").at(0).get<std::size_t>() - 1,
                                    j.at("mismatch").at(1).get<std::size_t>() - 1);
}

void to_json(json& j, const OracleCheck& o) {
    j = json{{"mixing_counts", o.mixing_counts}, {"agrees", o.agrees}};
}

void from_json(const json& j, OracleCheck& o) {
    o.mixing_counts = j.at("mixing_counts").get<std::vector<std::size_t>>();
    o.agrees = j.at("agrees").get<bool>();
}

void to_json(json& j, const ConeSummary& c) {
    j = json{{"ambient_dim", c.ambient_dim},
             {"generator_count", c.generator_count},
             {"element_count", c.elements.size()},
             {"elements", bvs_to_json(c.elements)},
             {"minimal_generators", bvs_to_json(c.minimal)}};
}

void from_json(const json& j, ConeSummary& c) {
    c.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    c.generator_count = j.at("generator_count").get<std::size_t>();
    c.elements = bvs_from_json(j.at("elements"));
    c.minimal = bvs_from_json(j.at("minimal_generators"));
}

void to_json(json& j, const ReportDocument& d) {
    j = json{{"input_path", d.input_path},
             {"matrix_shape", json::array({d.n_rows, d.n_cols})},
             {"budget", json{{"nodes", d.budget_nodes},
                             {"seconds", d.budget_seconds},
                             {"explicit", d.budget_explicit}}},
             {"timings_us", d.timings_us}};
    if (d.ranks) j["rank_report"] = *d.ranks;
    if (d.uniqueness) j["uniqueness_report"] = *d.uniqueness;
    if (d.census) j["cone_census"] = *d.census;
    if (d.oracle) j["oracle"] = *d.oracle;
    if (d.verify) j["verify"] = *d.verify;
    if (d.cone) j["cone"] = *d.cone;
}

void from_json(const json& j, ReportDocument& d) {
    d = ReportDocument{};
    d.input_path = j.at("input_path").get<std::string>();
    d.n_rows = j.at("matrix_shape").at(0).get<std::size_t>();
    d.n_cols = j.at("matrix_shape").at(1).get<std::size_t>();
    const json& budget = j.at("budget");
    d.budget_nodes = budget.at("nodes").get<std::uint64_t>();
    d.budget_seconds = budget.at("seconds").get<double>();
    d.budget_explicit = budget.at("explicit").get<bool>();
    d.timings_us = j.at("timings_us").get<std::map<std::string, std::int64_t>>();
    if (j.contains("rank_report")) d.ranks = j.at("rank_report").get<RankReport>();
    if (j.contains("uniqueness_report"))
        d.uniqueness = j.at("uniqueness_report").get<UniquenessReport>();
    if (j.contains("cone_census")) d.census = j.at("cone_census").get<ConeCensus>();
    if (j.contains("oracle")) d.oracle = j.at("oracle").get<OracleCheck>();
    if (j.contains("verify")) d.verify = j.at("verify").get<VerifyOutcome>();
    if (j.contains("cone")) d.cone = j.at("cone").get<ConeSummary>();
}

// ---------------------------------------------------------------------------
// Text rendering.

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

void render_matrix_block(std::ostringstream& out, const FactorMatrix& m,
                         const char* label) {
    out << "  " << label << ":\n";
    if (std::holds_alternative<BinaryMatrix>(m)) {
        const BinaryMatrix& b = std::get<BinaryMatrix>(m);
        for (std::size_t i = 0; i < b.n_rows(); ++i) {
            out << "    ";
            for (std::size_t j = 0; j < b.n_cols(); ++j)
                out << (j ? " " : "") << (b.at(i, j) ? 1 : 0);
            out << "\n";
        }
        if (b.n_rows() == 0) out << "    (no rows)\n";
    } else {
        const RationalMatrix& q = std::get<RationalMatrix>(m);
        for (std::size_t i = 0; i < q.n_rows(); ++i) {
            out << "    ";
            for (std::size_t j = 0; j < q.n_cols(); ++j)
                out << (j ? " " : "") << rational_to_string(q.at(i, j));
            out << "\n";
        }
        if (q.n_rows() == 0) out << "    (no rows)\n";
    }
}

void render_indices(std::ostringstream& out, const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i] + 1;
    if (v.empty()) out << "(none)";
}

void render_field_rank(std::ostringstream& out, const char* name,
                       const FieldRankResult& r) {
    out << name << ": " << r.rank << "\n  pivot rows: ";
    render_indices(out, r.pivot_rows);
    out << "\n  pivot cols: ";
    render_indices(out, r.pivot_cols);
    out << "\n";
}

void render_exact_rank(std::ostringstream& out, const char* name,
                       const ExactRankResult& r) {
    out << name << ": " << r.rank << "\n";
    out << "  witness semiring: " << to_string(r.factorization.semiring)
        << ", inner dimension " << r.factorization.inner_dim << "\n";
    render_matrix_block(out, r.factorization.w, "witness W");
    render_matrix_block(out, r.factorization.h, "witness H");
}

std::string interval_text(const NonnegBounds& b) {
    std::ostringstream out;
    out << "[" << b.lo << ", " << b.hi << "]" << (b.exact ? " exact" : "");
    return out.str();
}

void render_bvs(std::ostringstream& out, const std::vector<BoolVector>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? " " : "") << vs[i].to_string();
    if (vs.empty()) out << "(none)";
}

} // namespace

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "input: " << doc.input_path << "\n";
    out << "shape: " << doc.n_rows << "x" << doc.n_cols << "\n";
    out << "budget: nodes=" << doc.budget_nodes
        << " seconds=" << json(doc.budget_seconds).dump()
        << " explicit=" << yn(doc.budget_explicit) << "\n";

    if (doc.ranks) {
        const RankReport& r = *doc.ranks;
        out << "\nranks | " << doc.input_path << " " << doc.n_rows << "x"
            << doc.n_cols;
        if (r.real) out << " | rk_real " << r.real->rank;
        if (r.z2) out << " | rk_z2 " << r.z2->rank;
        if (r.boolean_) out << " | rk_boolean " << r.boolean_->rank;
        if (r.binary) out << " | rk_binary " << r.binary->rank;
        if (r.nonneg) out << " | rk_nonneg " << interval_text(*r.nonneg);
        if (r.isolation) out << " | isolation " << r.isolation->number;
        out << "\n\n";

        if (r.real) render_field_rank(out, "rk_real", *r.real);
        if (r.z2) render_field_rank(out, "rk_z2", *r.z2);
        if (r.boolean_) render_exact_rank(out, "rk_boolean", *r.boolean_);
        if (r.binary) render_exact_rank(out, "rk_binary", *r.binary);
        if (r.nonneg) {
            out << "rk_nonneg: " << interval_text(*r.nonneg) << "\n";
            out << "  lower bound from " << r.nonneg->lo_source
                << ", upper bound from " << r.nonneg->hi_source << "\n";
        }
        if (r.isolation) {
            out << "isolation: " << r.isolation->number << "\n  witness cells:";
            for (const auto& [a, b] : r.isolation->witness)
                out << " (" << a + 1 << ", " << b + 1 << ")";
            if (r.isolation->witness.empty()) out << " (none)";
            out << "\n";
        }
        for (const auto& [field, reason] : r.not_computed)
            out << "not computed: " << field << " (" << reason << ")\n";
    }

    if (doc.uniqueness) {
        const UniquenessReport& u = *doc.uniqueness;
        out << "\nboolean_rank: " << u.boolean_rank << "\n";
        out << "boolean_column_rank: " << u.boolean_column_rank << "\n";
        out << "unique_w: " << yn(u.unique_w) << "\n";
        out << "cone_census_size: " << u.cone_census_size << "\n";
        out << "census_exhausted: " << yn(u.census_exhausted) << "\n";
        out << "w_generators: ";
        render_bvs(out, u.w_generators);
        out << "\n";
        out << "w_is_representative: " << yn(u.w_is_representative) << "\n";
        out << "unique_h_given_w: " << yn(u.unique_h_given_w) << "\n";
        if (!u.h_offending_columns.empty()) {
            out << "  offending columns: ";
            render_indices(out, u.h_offending_columns);
            out << "\n";
        }
        out << "boundary_close: " << yn(u.boundary_close_w) << "\n";
        out << "fully_unique: " << yn(u.fully_unique) << "\n";
    }

    if (doc.census) {
        const ConeCensus& c = *doc.census;
        out << "\ncensus (order " << c.target_order << ", " << c.cones.size()
            << (c.cones.size() == 1 ? " cone" : " cones")
            << (c.exhausted ? "" : ", truncated by budget") << "):\n";
        for (std::size_t i = 0; i < c.cones.size(); ++i) {
            out << "  cone " << i + 1 << ": ";
            render_bvs(out, c.cones[i]);
            out << "\n";
        }
    }

    if (doc.oracle) {
        out << "\nmixing counts:";
        for (std::size_t c : doc.oracle->mixing_counts) out << " " << c;
        if (doc.oracle->mixing_counts.empty()) out << " (none)";
        out << "\noracle agrees: " << yn(doc.oracle->agrees) << "\n";
    }

    if (doc.verify) {
        out << "\nsemiring: " << doc.verify->semiring << "\n";
        out << "verified: " << yn(doc.verify->verified) << "\n";
        if (doc.verify->mismatch)
            out << "mismatch at (" << doc.verify->mismatch->first + 1 << ", "
                << doc.verify->mismatch->second + 1 << ")\n";
    }

    if (doc.cone) {
        const ConeSummary& c = *doc.cone;
        out << "\nambient_dim: " << c.ambient_dim << "\n";
        out << "generators: " << c.generator_count << "\n";
        out << "elements (" << c.elements.size() << "): ";
        render_bvs(out, c.elements);
        out << "\n";
        out << "minimal generators (" << c.minimal.size() << "): ";
        render_bvs(out, c.minimal);
        out << "\n";
    }

    if (!doc.timings_us.empty()) {
        out << "\ntimings_us:";
        for (const auto& [name, us] : doc.timings_us) out << " " << name << "=" << us;
        out << "\n";
    }
    return out.str();
}

} // namespace semirank
