#pragma once

#include "kirchhoff/graph.hpp"

#include <string>
#include <vector>

namespace kirchhoff {

/// Path on n vertices (0-1-2-...-n-1).
Graph make_path(int n);

/// Cycle on n vertices.
Graph make_cycle(int n);

/// Star with the given number of leaves (center is vertex 0).
Graph make_star(int leaves);

/// Complete graph on n vertices.
Graph make_complete(int n);

struct CorpusEntry {
    std::string id;
    Graph graph;
};

/// The builtin verification corpus: paths P2..P8, cycles C3..C8, stars
/// K1,3..K1,6, complete graphs K3..K6, and 20 seeded random connected
/// graphs with at most 10 vertices (ids R01..R20; fixed seed so the corpus
/// is identical on every run and platform).
std::vector<CorpusEntry> builtin_corpus();

}  // namespace kirchhoff
