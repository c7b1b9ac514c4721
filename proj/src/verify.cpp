#include "kirchhoff/verify.hpp"

#include "kirchhoff/closed_forms.hpp"
#include "kirchhoff/invariants.hpp"
#include "kirchhoff/lifting.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace kirchhoff {

namespace {

template <class T>
SquareMatrix<T> oracle_omega(const Graph& g, const VerifyOptions& o) {
    if constexpr (std::is_same_v<T, double>) {
        (void)o;
        return resistance_matrix(g, Parallelism::OpenMP);
    } else {
        return resistance_matrix_exact(g, o.rational_vertex_cap);
    }
}

/// Builds rows for one graph. Float rows pass on rel residual <= tolerance
/// (abs when the oracle value is zero); rational rows pass only on exact
/// equality.
template <class T>
class RowBuilder {
public:
    RowBuilder(std::string graph_id, const VerifyOptions& opts, std::vector<ReportRow>& out)
        : id_(std::move(graph_id)), opts_(opts), out_(out) {}

    void add(const std::string& formula, const T& closed, const T& oracle) {
        ReportRow row;
        row.graph_id = id_;
        row.formula_name = formula;
        row.closed_form_value = to_double(closed);
        row.oracle_value = to_double(oracle);
        if constexpr (std::is_same_v<T, double>) {
            row.abs_residual = std::abs(closed - oracle);
            row.rel_residual = oracle != 0.0 ? row.abs_residual / std::abs(oracle) : row.abs_residual;
            row.pass = row.rel_residual <= opts_.tolerance;
        } else {
            const T diff = closed >= oracle ? T(closed - oracle) : T(oracle - closed);
            row.abs_residual = to_double(diff);
            row.rel_residual =
                oracle != T(0) ? to_double(T(diff / abs(oracle))) : row.abs_residual;
            row.pass = diff == T(0);
        }
        out_.push_back(std::move(row));
    }

    /// Worst-entry comparison of two matrices over unordered pairs.
    void add_worst(const std::string& formula, const SquareMatrix<T>& closed,
                   const SquareMatrix<T>& oracle) {
        T worst_c(0), worst_o(0), worst_abs(-1);
        for (int i = 0; i < closed.order(); ++i) {
            for (int j = i + 1; j < closed.order(); ++j) {
                const T c = closed(i, j), o = oracle(i, j);
                const T diff = c >= o ? T(c - o) : T(o - c);
                if (diff > worst_abs) {
                    worst_abs = diff;
                    worst_c = c;
                    worst_o = o;
                }
            }
        }
        add(formula, worst_c, worst_o);
    }

private:
    std::string id_;
    const VerifyOptions& opts_;
    std::vector<ReportRow>& out_;
};

/// Steps a materialized iterate, enforcing the structural vertex cap first.
Graph step_checked(const Graph& g, TransformKind kind, std::int64_t cap) {
    const std::int64_t next = static_cast<std::int64_t>(g.vertex_count()) + g.edge_count();
    if (next > cap)
        throw SizeOverflow("iterate would produce " + std::to_string(next) +
                           " vertices, above the cap of " + std::to_string(cap));
    return kind == TransformKind::Subdivision ? subdivide(g) : triangulate(g);
}

template <class T>
void build_rows(const std::string& id, const Graph& g, const VerifyOptions& opts,
                std::vector<ReportRow>& out) {
    constexpr bool is_double = std::is_same_v<T, double>;
    const Parallelism par = is_double ? Parallelism::OpenMP : Parallelism::Serial;
    RowBuilder<T> rows(id, opts, out);

    const std::int64_t n = g.vertex_count(), m = g.edge_count();
    const SquareMatrix<T> omega = oracle_omega<T>(g, opts);
    const InvariantTriple<T> base = compute_invariants(g, omega);
    const ClosedFormInput<T> input = closed_form_input(g, base);

    // Foster's identity: adjacent-pair resistances sum to n - 1.
    rows.add("Lemma2.2", T(n - 1), foster_sum(g, omega));

    // Materialized one-step transforms and their brute-force matrices.
    const Graph s1 = subdivide(g);
    const Graph t1 = triangulate(g);
    const SquareMatrix<T> omega_s1 = oracle_omega<T>(s1, opts);
    const SquareMatrix<T> omega_t1 = oracle_omega<T>(t1, opts);
    const InvariantTriple<T> triple_s1 = compute_invariants(s1, omega_s1);
    const InvariantTriple<T> triple_t1 = compute_invariants(t1, omega_t1);

    // Lifting lemmas, entrywise (worst entry reported).
    const LiftedResistance<T> lift_s = lift_subdivision(g, omega, par);
    const LiftedResistance<T> lift_t = lift_triangulation(g, omega, par);
    rows.add_worst("Lemma2.1", lift_s.omega, omega_s1);
    rows.add_worst("Lemma4.1", lift_t.omega, omega_t1);

    // Relation between the two lifted matrices: Omega^T = Omega^S / 3 plus a
    // block offset (0 original-original, 1/3 mixed, 2/3 inserted-inserted).
    {
        SquareMatrix<T> predicted(lift_s.omega.order());
        for (int i = 0; i < predicted.order(); ++i) {
            for (int j = i + 1; j < predicted.order(); ++j) {
                T offset(0);
                const bool i_orig = i < n, j_orig = j < n;
                if (i_orig != j_orig) offset = frac<T>(1, 3);
                if (!i_orig && !j_orig) offset = frac<T>(2, 3);
                predicted(i, j) = lift_s.omega(i, j) / T(3) + offset;
            }
        }
        rows.add_worst("Prop4.2", predicted, omega_t1);
    }

    // Partial-sum identities over the materialized subdivision.
    {
        const auto direct = partial_sums_subdivision(g, LiftedResistance<T>{s1, omega_s1});
        const auto closed = partial_sums_closed_forms(n, m, base);
        rows.add("Eq14", closed[0], direct[0]);
        rows.add("Eq17", closed[1], direct[1]);
        rows.add("Eq18", closed[2], direct[2]);
    }

    // One-step closed forms.
    const InvariantTriple<T> s_forms = subdivision_closed_forms(input);
    rows.add("Thm2.3", s_forms.kirchhoff, triple_s1.kirchhoff);
    rows.add("Thm2.4", s_forms.additive, triple_s1.additive);
    rows.add("Thm2.5", s_forms.multiplicative, triple_s1.multiplicative);

    const InvariantTriple<T> t_forms = triangulation_closed_forms(input);
    rows.add("Thm4.3", t_forms.kirchhoff, triple_t1.kirchhoff);
    rows.add("Thm4.4", t_forms.additive, triple_t1.additive);
    rows.add("Thm4.5", t_forms.multiplicative, triple_t1.multiplicative);

    // Subdivision-to-triangulation comparison, applied to the S closed forms.
    const InvariantTriple<T> st = st_comparison(s_forms, n, m);
    rows.add("Prop4.6.R", st.kirchhoff, triple_t1.kirchhoff);
    rows.add("Prop4.6.R+", st.additive, triple_t1.additive);
    rows.add("Prop4.6.R*", st.multiplicative, triple_t1.multiplicative);

    // Iterated subdivision ladder.
    {
        Graph cur = g;
        for (int k = 0; k <= opts.max_k_s; ++k) {
            InvariantTriple<T> oracle_k;
            if (k == 0) {
                oracle_k = base;
            } else if (k == 1) {
                oracle_k = triple_s1;
                cur = s1;
            } else {
                cur = step_checked(cur, TransformKind::Subdivision, opts.vertex_cap);
                const SquareMatrix<T> om = oracle_omega<T>(cur, opts);
                oracle_k = compute_invariants(cur, om);
            }
            const InvariantTriple<T> closed = iterated_subdivision_closed_forms(input, k);
            const std::string suffix = ",k=" + std::to_string(k);
            rows.add("Thm3.2" + suffix, closed.multiplicative, oracle_k.multiplicative);
            rows.add("Thm3.3" + suffix, closed.additive, oracle_k.additive);
            rows.add("Thm3.4" + suffix, closed.kirchhoff, oracle_k.kirchhoff);
        }
    }

    // Iterated triangulation ladder.
    {
        Graph cur = g;
        for (int k = 0; k <= opts.max_k_t; ++k) {
            InvariantTriple<T> oracle_k;
            if (k == 0) {
                oracle_k = base;
            } else if (k == 1) {
                oracle_k = triple_t1;
                cur = t1;
            } else {
                cur = step_checked(cur, TransformKind::Triangulation, opts.vertex_cap);
                const SquareMatrix<T> om = oracle_omega<T>(cur, opts);
                oracle_k = compute_invariants(cur, om);
            }
            const InvariantTriple<T> closed = iterated_triangulation_closed_forms(input, k);
            const std::string suffix = ",k=" + std::to_string(k);
            rows.add("Thm5.1" + suffix, closed.multiplicative, oracle_k.multiplicative);
            rows.add("Thm5.2" + suffix, closed.additive, oracle_k.additive);
            rows.add("Thm5.3" + suffix, closed.kirchhoff, oracle_k.kirchhoff);
        }
    }

    // Recurrence solver: product-sum form vs naive iteration on the
    // R*(S^k) recurrence y' = 8y + 2 m_k (2 m_k - 2 n_k + 1).
    {
        RecurrenceSpec<T> spec;
        spec.y0 = base.multiplicative;
        spec.multiplier = [](int) { return T(8); };
        spec.addend = [n, m](int i) {
            const SizePrediction p = predict_sizes(n, m, TransformKind::Subdivision, i);
            return T(2 * p.m_k * (2 * p.m_k - 2 * p.n_k + 1));
        };
        rows.add("Lemma3.1", solve_linear_recurrence(spec, opts.max_k_s),
                 iterate_linear_recurrence(spec, opts.max_k_s));
    }

    // Regular-graph specializations.
    int r = 0;
    if (g.is_regular(r)) {
        rows.add("Remark4.R+", T(2 * r) * base.kirchhoff, base.additive);
        rows.add("Remark4.R*", T(r) * T(r) * base.kirchhoff, base.multiplicative);
        rows.add("Remark4.RT", regular_triangulation_kirchhoff(n, r, base.kirchhoff),
                 triple_t1.kirchhoff);
    }
}

void finalize(VerificationReport& report) {
    std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.graph_id, a.formula_name) < std::tie(b.graph_id, b.formula_name);
    });
    report.pass_count = 0;
    report.fail_count = 0;
    for (const auto& row : report.rows) (row.pass ? report.pass_count : report.fail_count)++;
}

VerificationReport make_report_shell(const VerifyOptions& opts) {
    VerificationReport report;
    report.backend = opts.backend == BackendKind::FloatRegularized ? "float" : "rational";
    report.tolerance = opts.tolerance;
    report.max_k_s = opts.max_k_s;
    report.max_k_t = opts.max_k_t;
    return report;
}

}  // namespace

VerificationReport verify_graph(const std::string& graph_id, const Graph& g,
                                const VerifyOptions& opts) {
    VerificationReport report = make_report_shell(opts);
    if (opts.backend == BackendKind::FloatRegularized) {
        build_rows<double>(graph_id, g, opts, report.rows);
    } else {
        build_rows<Rational>(graph_id, g, opts, report.rows);
    }
    finalize(report);
    return report;
}

VerificationReport verify_corpus(const std::vector<CorpusEntry>& corpus,
                                 const VerifyOptions& opts) {
    VerificationReport report = make_report_shell(opts);
    for (const auto& entry : corpus) {
        if (opts.backend == BackendKind::FloatRegularized) {
            build_rows<double>(entry.id, entry.graph, opts, report.rows);
        } else {
            build_rows<Rational>(entry.id, entry.graph, opts, report.rows);
        }
    }
    finalize(report);
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["backend"] = report.backend;
    j["tolerance"] = report.tolerance;
    j["max_k_s"] = report.max_k_s;
    j["max_k_t"] = report.max_k_t;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"graph_id", row.graph_id},
                        {"formula_name", row.formula_name},
                        {"closed_form_value", row.closed_form_value},
                        {"oracle_value", row.oracle_value},
                        {"abs_residual", row.abs_residual},
                        {"rel_residual", row.rel_residual},
                        {"pass", row.pass}});
    }
    j["rows"] = std::move(rows);
    j["corpus_summary"] = {{"pass", report.pass_count}, {"fail", report.fail_count}};
    return j.dump(2);
}

VerificationReport parse_report(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    VerificationReport report;
    report.backend = j.at("backend").get<std::string>();
    report.tolerance = j.at("tolerance").get<double>();
    report.max_k_s = j.at("max_k_s").get<int>();
    report.max_k_t = j.at("max_k_t").get<int>();
    for (const auto& row_json : j.at("rows")) {
        ReportRow row;
        row.graph_id = row_json.at("graph_id").get<std::string>();
        row.formula_name = row_json.at("formula_name").get<std::string>();
        row.closed_form_value = row_json.at("closed_form_value").get<double>();
        row.oracle_value = row_json.at("oracle_value").get<double>();
        row.abs_residual = row_json.at("abs_residual").get<double>();
        row.rel_residual = row_json.at("rel_residual").get<double>();
        row.pass = row_json.at("pass").get<bool>();
        report.rows.push_back(std::move(row));
    }
    report.pass_count = j.at("corpus_summary").at("pass").get<std::int64_t>();
    report.fail_count = j.at("corpus_summary").at("fail").get<std::int64_t>();
    return report;
}

void print_report_table(std::ostream& out, const VerificationReport& report) {
    out << std::left << std::setw(8) << "graph" << std::setw(14) << "formula" << std::right
        << std::setw(22) << "closed_form" << std::setw(22) << "oracle" << std::setw(13)
        << "rel_resid" << "  status\n";
    for (const auto& row : report.rows) {
        std::ostringstream cf, ov, rr;
        cf << std::setprecision(12) << row.closed_form_value;
        ov << std::setprecision(12) << row.oracle_value;
        rr << std::scientific << std::setprecision(2) << row.rel_residual;
        out << std::left << std::setw(8) << row.graph_id << std::setw(14) << row.formula_name
            << std::right << std::setw(22) << cf.str() << std::setw(22) << ov.str()
            << std::setw(13) << rr.str() << (row.pass ? "  pass" : "  FAIL") << '\n';
    }
    out << "summary: " << report.pass_count << " pass, " << report.fail_count << " fail (backend "
        << report.backend << ", tol " << report.tolerance << ")\n";
}

}  // namespace kirchhoff
