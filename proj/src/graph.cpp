#include "kirchhoff/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace kirchhoff {

Graph Graph::from_edge_list(std::vector<Edge> pairs, int vertex_count) {
    if (vertex_count < 2) throw TooFewVertices(vertex_count);

    for (auto& [u, v] : pairs) {
        if (u == v) throw SelfLoop(u);
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::out_of_range("vertex id (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") outside [0, " +
                                    std::to_string(vertex_count) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i] == pairs[i - 1]) throw DuplicateEdge(pairs[i].first, pairs[i].second);
    }

    Graph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(pairs);
    g.provenance_.assign(vertex_count, Provenance::Original);
    g.parent_edge_.assign(vertex_count, Edge{-1, -1});
    g.build_adjacency();
    g.check_connected();
    return g;
}

void Graph::build_adjacency() {
    adjacency_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                frontier.push(v);
            }
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (!seen[v]) throw Disconnected(v, 0);
    }
}

bool Graph::is_regular(int& r) const {
    r = degree(0);
    for (int v = 1; v < n_; ++v) {
        if (degree(v) != r) return false;
    }
    return true;
}

// In both transforms the new vertex for the i-th canonical edge gets id
// n + i, tagged Inserted with that edge as parent; all input vertices are
// re-tagged Original (provenance is relative to this one application, which
// keeps the degree-2/parent-neighbor invariant true on iterates).

Graph subdivide(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    Graph out;
    out.n_ = n + m;
    out.edges_.reserve(2 * static_cast<std::size_t>(m));
    out.provenance_.assign(out.n_, Provenance::Original);
    out.parent_edge_.assign(out.n_, Edge{-1, -1});
    for (int i = 0; i < m; ++i) {
        const Edge e = g.edges()[i];
        const int w = n + i;
        out.provenance_[w] = Provenance::Inserted;
        out.parent_edge_[w] = e;
        out.edges_.push_back({e.first, w});
        out.edges_.push_back({e.second, w});
    }
    std::sort(out.edges_.begin(), out.edges_.end());
    out.build_adjacency();
    return out;
}

Graph triangulate(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    Graph out;
    out.n_ = n + m;
    out.edges_.reserve(3 * static_cast<std::size_t>(m));
    out.provenance_.assign(out.n_, Provenance::Original);
    out.parent_edge_.assign(out.n_, Edge{-1, -1});
    out.edges_ = g.edges();
    for (int i = 0; i < m; ++i) {
        const Edge e = g.edges()[i];
        const int w = n + i;
        out.provenance_[w] = Provenance::Inserted;
        out.parent_edge_[w] = e;
        out.edges_.push_back({e.first, w});
        out.edges_.push_back({e.second, w});
    }
    std::sort(out.edges_.begin(), out.edges_.end());
    out.build_adjacency();
    return out;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw SizeOverflow(std::string(what) + " overflows 64-bit range");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw SizeOverflow(std::string(what) + " overflows 64-bit range");
    return r;
}

}  // namespace

SizePrediction predict_sizes(std::int64_t n, std::int64_t m, TransformKind kind, int k) {
    if (k < 0) throw std::invalid_argument("iteration depth k must be >= 0");
    // Stepwise evaluation of n_{i+1} = n_i + m_i, m_{i+1} = c * m_i with
    // c = 2 (subdivision) or 3 (triangulation); equal to the closed forms.
    const std::int64_t factor = (kind == TransformKind::Subdivision) ? 2 : 3;
    SizePrediction p{n, m, k};
    for (int i = 0; i < k; ++i) {
        p.n_k = checked_add(p.n_k, p.m_k, "vertex count");
        p.m_k = checked_mul(p.m_k, factor, "edge count");
    }
    return p;
}

Graph iterate_transform(const Graph& g, TransformKind kind, int k, std::int64_t vertex_cap) {
    const SizePrediction p = predict_sizes(g.vertex_count(), g.edge_count(), kind, k);
    if (p.n_k > vertex_cap) {
        throw SizeOverflow("iterate would produce " + std::to_string(p.n_k) +
                           " vertices, above the cap of " + std::to_string(vertex_cap));
    }
    Graph out = g;
    for (int i = 0; i < k; ++i) {
        out = (kind == TransformKind::Subdivision) ? subdivide(out) : triangulate(out);
    }
    return out;
}

}  // namespace kirchhoff
