#pragma once

#include "kirchhoff/corpus.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/resistance.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kirchhoff {

/// One closed-form-vs-oracle comparison. For matrix-valued statements the
/// row reports the worst entry (largest absolute residual).
struct ReportRow {
    std::string graph_id;
    std::string formula_name;
    double closed_form_value = 0.0;
    double oracle_value = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    bool pass = false;

    bool operator==(const ReportRow&) const = default;
};

struct VerifyOptions {
    int max_k_s = 3;
    int max_k_t = 2;
    double tolerance = 1e-9;
    BackendKind backend = BackendKind::FloatRegularized;
    std::int64_t vertex_cap = kDefaultVertexCap;
    int rational_vertex_cap = kDefaultRationalVertexCap;
};

struct VerificationReport {
    std::string backend;  // "float" or "rational"
    double tolerance = 0.0;
    int max_k_s = 0;
    int max_k_t = 0;
    std::vector<ReportRow> rows;  // sorted by (graph_id, formula_name)
    std::int64_t pass_count = 0;
    std::int64_t fail_count = 0;

    bool all_pass() const { return fail_count == 0; }

    bool operator==(const VerificationReport&) const = default;
};

/// Evaluates every implemented formula on one graph: Foster's identity, the
/// two lifting lemmas and their relation, the three partial-sum identities,
/// the one-step and iterated closed forms, the S/T comparison relations, the
/// recurrence solver, and (for regular graphs) the specialized identities.
/// Under the rational backend rows pass only on exact equality.
VerificationReport verify_graph(const std::string& graph_id, const Graph& g,
                                const VerifyOptions& opts = {});

/// Runs verify_graph over a corpus and merges the reports (rows re-sorted,
/// counts summed).
VerificationReport verify_corpus(const std::vector<CorpusEntry>& corpus,
                                 const VerifyOptions& opts = {});

/// JSON serialization of a report; parse_report inverts it (round-trip
/// stability is tested).
std::string report_to_json(const VerificationReport& report);
VerificationReport parse_report(const std::string& json_text);

/// Human-readable fixed-width table, one row per comparison plus a summary.
void print_report_table(std::ostream& out, const VerificationReport& report);

}  // namespace kirchhoff
