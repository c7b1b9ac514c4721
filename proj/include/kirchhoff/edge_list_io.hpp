#pragma once

#include "kirchhoff/graph.hpp"

#include <iosfwd>
#include <string>

namespace kirchhoff {

/// Parses the edge-list text format:
///   - first data line: "n m"
///   - then m lines "u v" (0-based vertex ids)
///   - '#' starts a comment (whole-line or trailing); blank lines ignored.
/// The source name is used in error messages. Throws ParseError with the
/// offending line number, or the graph validation errors.
Graph parse_edge_list(std::istream& in, const std::string& source_name);

/// Reads and parses a file. Throws ParseError if the file cannot be opened.
Graph read_edge_list_file(const std::string& path);

/// Writes a graph in the same format. When with_provenance is true, a
/// comment block before the edges lists each Inserted vertex and its parent
/// edge; readers ignore it, so files always round-trip.
void write_edge_list(std::ostream& out, const Graph& g, bool with_provenance = true);

void write_edge_list_file(const std::string& path, const Graph& g, bool with_provenance = true);

}  // namespace kirchhoff
