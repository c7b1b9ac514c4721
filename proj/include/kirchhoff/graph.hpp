#pragma once

#include "kirchhoff/errors.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kirchhoff {

/// Unordered vertex pair, stored with the smaller id first.
using Edge = std::pair<int, int>;

enum class Provenance { Original, Inserted };

enum class TransformKind { Subdivision, Triangulation };

/// Predicted vertex/edge counts of the k-th transform iterate.
struct SizePrediction {
    std::int64_t n_k = 0;
    std::int64_t m_k = 0;
    int k = 0;
};

/// Default limit on materialized vertex counts (overridable per call and via
/// the KIRCHHOFF_VERTEX_CAP environment variable in the CLI).
inline constexpr std::int64_t kDefaultVertexCap = 1'000'000;

/// A simple connected undirected graph with canonical edge order and
/// per-vertex provenance. Instances are immutable once built; the transform
/// operations return new graphs whose inserted vertices are tagged relative
/// to that one application.
class Graph {
public:
    /// Validates and canonicalizes an edge list. Pairs may arrive in any
    /// order and orientation; ids must lie in [0, vertex_count).
    static Graph from_edge_list(std::vector<Edge> pairs, int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonically ordered edges: each pair (u, v) has u < v and the list is
    /// sorted lexicographically. The inserted vertex for the i-th edge of a
    /// transform gets id vertex_count() + i, so this order pins vertex ids.
    const std::vector<Edge>& edges() const { return edges_; }

    Provenance provenance(int v) const { return provenance_[v]; }

    /// Parent edge of an Inserted vertex (endpoints in the base graph).
    /// Only meaningful when provenance(v) == Provenance::Inserted.
    Edge parent_edge(int v) const { return parent_edge_[v]; }

    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    /// Sum of all vertex degrees (= 2m). Useful for closed-form checks.
    std::int64_t degree_sum() const { return 2 * static_cast<std::int64_t>(edges_.size()); }

    /// True when every vertex has the same degree; r receives that degree.
    bool is_regular(int& r) const;

private:
    Graph() = default;
    friend Graph subdivide(const Graph&);
    friend Graph triangulate(const Graph&);

    void build_adjacency();
    void check_connected() const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Provenance> provenance_;
    std::vector<Edge> parent_edge_;
    std::vector<std::vector<int>> adjacency_;
};

/// Replaces every edge (u, v) by the path u - w - v through a new vertex w.
/// Result: n + m vertices, 2m edges; new vertices tagged Inserted.
Graph subdivide(const Graph& g);

/// Adds, for every edge (u, v), a new vertex w adjacent to both u and v,
/// keeping the edge. Result: n + m vertices, 3m edges.
Graph triangulate(const Graph& g);

/// k-fold application of the operator; k = 0 returns the input unchanged.
/// Throws SizeOverflow if the predicted vertex count exceeds vertex_cap.
Graph iterate_transform(const Graph& g, TransformKind kind, int k,
                        std::int64_t vertex_cap = kDefaultVertexCap);

/// Closed-form sizes of the k-th iterate. Throws SizeOverflow if the counts
/// leave the 64-bit range (no cap is applied here).
SizePrediction predict_sizes(std::int64_t n, std::int64_t m, TransformKind kind, int k);

}  // namespace kirchhoff
