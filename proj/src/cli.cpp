#include "kirchhoff/cli.hpp"

#include "kirchhoff/corpus.hpp"
#include "kirchhoff/edge_list_io.hpp"
#include "kirchhoff/errors.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/invariants.hpp"
#include "kirchhoff/resistance.hpp"
#include "kirchhoff/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

namespace kirchhoff::cli {

namespace {

/// Structural vertex cap, overridable through KIRCHHOFF_VERTEX_CAP.
std::int64_t effective_vertex_cap() {
    const char* raw = std::getenv("KIRCHHOFF_VERTEX_CAP");
    if (raw == nullptr) return kDefaultVertexCap;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0)
        throw InputError("KIRCHHOFF_VERTEX_CAP must be a positive integer, got \"" +
                         std::string(raw) + "\"");
    return value;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file \"" + path + "\"");
    return out;
}

int cmd_compute(const std::string& file, const std::string& backend,
                const std::string& omega_csv, int rational_cap, std::ostream& out) {
    const Graph g = read_edge_list_file(file);
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (backend == "rational") {
        const SquareMatrix<Rational> omega = resistance_matrix_exact(g, rational_cap);
        const InvariantTriple<Rational> triple = compute_invariants(g, omega);
        j["R"] = to_double(triple.kirchhoff);
        j["R_plus"] = to_double(triple.additive);
        j["R_star"] = to_double(triple.multiplicative);
        j["R_exact"] = to_string(triple.kirchhoff);
        j["R_plus_exact"] = to_string(triple.additive);
        j["R_star_exact"] = to_string(triple.multiplicative);
        if (!omega_csv.empty()) {
            auto csv = open_output(omega_csv);
            write_matrix_csv(csv, omega);
        }
    } else {
        const SquareMatrix<double> omega = resistance_matrix(g);
        const InvariantTriple<double> triple = compute_invariants(g, omega);
        j["R"] = triple.kirchhoff;
        j["R_plus"] = triple.additive;
        j["R_star"] = triple.multiplicative;
        if (!omega_csv.empty()) {
            auto csv = open_output(omega_csv);
            write_matrix_csv(csv, omega);
        }
    }
    out << j.dump() << '\n';
    return static_cast<int>(ExitCode::Ok);
}

int cmd_transform(const std::string& file, const std::string& op, int k,
                  const std::string& out_path, std::ostream& out) {
    const Graph g = read_edge_list_file(file);
    const TransformKind kind =
        (op == "s" || op == "S") ? TransformKind::Subdivision : TransformKind::Triangulation;
    const Graph result = iterate_transform(g, kind, k, effective_vertex_cap());
    write_edge_list_file(out_path, result);
    nlohmann::ordered_json j;
    j["n"] = result.vertex_count();
    j["m"] = result.edge_count();
    j["out"] = out_path;
    out << j.dump() << '\n';
    return static_cast<int>(ExitCode::Ok);
}

int cmd_verify(const std::string& file, bool builtin, const VerifyOptions& opts,
               const std::string& json_path, std::ostream& out) {
    std::vector<CorpusEntry> corpus;
    if (builtin) {
        corpus = builtin_corpus();
    } else {
        corpus.push_back({std::filesystem::path(file).stem().string(),
                          read_edge_list_file(file)});
    }
    const VerificationReport report = verify_corpus(corpus, opts);
    print_report_table(out, report);
    if (!json_path.empty()) {
        auto json_out = open_output(json_path);
        json_out << report_to_json(report) << '\n';
    }
    return report.all_pass() ? static_cast<int>(ExitCode::Ok)
                             : static_cast<int>(ExitCode::VerificationFailure);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"resistance-distance invariants, graph transforms, and closed-form verification"};
    app.require_subcommand(1);

    std::string compute_file, compute_backend = "float", compute_csv;
    int compute_rational_cap = kDefaultRationalVertexCap;
    CLI::App* compute = app.add_subcommand("compute", "invariant triple of one graph");
    compute->add_option("file", compute_file, "edge-list file")->required();
    compute->add_option("--backend", compute_backend, "numeric backend")
        ->check(CLI::IsMember({"float", "rational"}));
    compute->add_option("--omega-csv", compute_csv, "write the resistance matrix as CSV");
    compute->add_option("--rational-cap", compute_rational_cap,
                        "vertex cap for the exact backend");

    std::string transform_file, transform_op, transform_out;
    int transform_k = 1;
    CLI::App* transform = app.add_subcommand("transform", "apply s or t repeatedly");
    transform->add_option("file", transform_file, "edge-list file")->required();
    transform->add_option("--op", transform_op, "operator: s (subdivide) or t (triangulate)")
        ->required()
        ->check(CLI::IsMember({"s", "t", "S", "T"}));
    transform->add_option("--k", transform_k, "iteration count")->check(CLI::NonNegativeNumber);
    transform->add_option("--out", transform_out, "output edge-list file")->required();

    std::string verify_file, verify_json, verify_backend = "float";
    bool verify_builtin = false;
    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "closed forms vs the brute-force oracle");
    verify->add_option("file", verify_file, "edge-list file");
    verify->add_flag("--builtin", verify_builtin, "use the builtin corpus");
    verify->add_option("--max-k-s", verify_opts.max_k_s, "subdivision iteration depth")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-k-t", verify_opts.max_k_t, "triangulation iteration depth")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", verify_opts.tolerance, "relative tolerance (float backend)");
    verify->add_option("--json", verify_json, "write the report as JSON");
    verify->add_option("--backend", verify_backend, "numeric backend")
        ->check(CLI::IsMember({"float", "rational"}));
    verify->add_option("--rational-cap", verify_opts.rational_vertex_cap,
                       "vertex cap for the exact backend");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return static_cast<int>(ExitCode::Ok);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    }

    try {
        if (compute->parsed())
            return cmd_compute(compute_file, compute_backend, compute_csv, compute_rational_cap,
                               out);
        if (transform->parsed())
            return cmd_transform(transform_file, transform_op, transform_k, transform_out, out);
        if (verify->parsed()) {
            if (verify_builtin == !verify_file.empty())
                throw InputError("verify needs an edge-list file or --builtin (not both)");
            verify_opts.backend = verify_backend == "rational" ? BackendKind::ExactRational
                                                               : BackendKind::FloatRegularized;
            verify_opts.vertex_cap = effective_vertex_cap();
            return cmd_verify(verify_file, verify_builtin, verify_opts, verify_json, out);
        }
    } catch (const KirchhoffError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::VerificationFailure);
    }
    return static_cast<int>(ExitCode::InputError);
}

}  // namespace kirchhoff::cli
