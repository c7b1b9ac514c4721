#include "kirchhoff/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kirchhoff {

Graph make_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edge_list(std::move(edges), n);
}

Graph make_cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edge_list(std::move(edges), n);
}

Graph make_star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::from_edge_list(std::move(edges), leaves + 1);
}

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edge_list(std::move(edges), n);
}

namespace {

/// Uniform draw from [0, bound) via modulo on the raw engine output. The
/// standard distributions are not bit-stable across library implementations;
/// the corpus must be, so the (slightly biased) modulo draw is deliberate.
int draw(std::mt19937& rng, int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)); }

Graph random_connected_graph(std::mt19937& rng) {
    const int n = 4 + draw(rng, 7);  // 4..10 vertices
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v) {
        const int u = draw(rng, v);  // random attachment keeps it connected
        edges.insert({u, v});
    }
    const int extra = draw(rng, 6);  // up to 5 additional edges
    int added = 0;
    for (int attempt = 0; attempt < 60 && added < extra; ++attempt) {
        int u = draw(rng, n);
        int v = draw(rng, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (edges.insert({u, v}).second) ++added;
    }
    return Graph::from_edge_list({edges.begin(), edges.end()}, n);
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> corpus;
    for (int n = 2; n <= 8; ++n) corpus.push_back({"P" + std::to_string(n), make_path(n)});
    for (int n = 3; n <= 8; ++n) corpus.push_back({"C" + std::to_string(n), make_cycle(n)});
    for (int q = 3; q <= 6; ++q) corpus.push_back({"K1," + std::to_string(q), make_star(q)});
    for (int n = 3; n <= 6; ++n) corpus.push_back({"K" + std::to_string(n), make_complete(n)});
    std::mt19937 rng(42);
    for (int i = 1; i <= 20; ++i) {
        std::string id = (i < 10 ? "R0" : "R") + std::to_string(i);
        corpus.push_back({std::move(id), random_connected_graph(rng)});
    }
    return corpus;
}

}  // namespace kirchhoff
