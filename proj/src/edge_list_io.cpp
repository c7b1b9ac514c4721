#include "kirchhoff/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace kirchhoff {

namespace {

/// Strips a trailing '#' comment and surrounding whitespace; returns whether
/// anything remains.
bool strip_comment(std::string& line) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        line.clear();
        return false;
    }
    const auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    return true;
}

/// Parses exactly `count` integers from the line; rejects trailing tokens.
std::vector<long long> parse_ints(const std::string& line, std::size_t count,
                                  const std::string& source, long long line_no) {
    std::istringstream iss(line);
    std::vector<long long> out;
    long long value = 0;
    while (iss >> value) out.push_back(value);
    if (!iss.eof()) {
        std::string tail;
        iss.clear();
        iss >> tail;
        throw ParseError(source, line_no, "unexpected token '" + tail + "'");
    }
    if (out.size() != count) {
        throw ParseError(source, line_no,
                         "expected " + std::to_string(count) + " integers, found " +
                             std::to_string(out.size()));
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    long long line_no = 0;
    long long n = -1, m = -1;
    long long header_line = 0;

    // Header: first non-comment line.
    while (std::getline(in, line)) {
        ++line_no;
        if (!strip_comment(line)) continue;
        const auto header = parse_ints(line, 2, source_name, line_no);
        n = header[0];
        m = header[1];
        header_line = line_no;
        break;
    }
    if (n < 0) throw ParseError(source_name, line_no, "missing \"n m\" header line");
    if (n < 2) throw TooFewVertices(n);
    if (m < 0) throw ParseError(source_name, header_line, "edge count must be non-negative");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (std::getline(in, line)) {
        ++line_no;
        if (!strip_comment(line)) continue;
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError(source_name, line_no,
                             "more than the declared " + std::to_string(m) + " edges");
        }
        const auto pair = parse_ints(line, 2, source_name, line_no);
        for (long long id : pair) {
            if (id < 0 || id >= n) {
                throw ParseError(source_name, line_no,
                                 "vertex id " + std::to_string(id) + " outside [0, " +
                                     std::to_string(n) + ")");
            }
        }
        edges.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(source_name, line_no,
                         "declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    }
    return Graph::from_edge_list(std::move(edges), static_cast<int>(n));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g, bool with_provenance) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (with_provenance) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.provenance(v) == Provenance::Inserted) {
                const Edge e = g.parent_edge(v);
                out << "# inserted vertex " << v << ": parent edge (" << e.first << ", "
                    << e.second << ")\n";
            }
        }
    }
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g, bool with_provenance) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    write_edge_list(out, g, with_provenance);
    if (!out.flush()) throw ParseError(path, 0, "write failed");
}

}  // namespace kirchhoff
