#pragma once

#include "kirchhoff/graph.hpp"
#include "kirchhoff/invariants.hpp"
#include "kirchhoff/kernels.hpp"
#include "kirchhoff/matrix.hpp"
#include "kirchhoff/rational.hpp"

#include <array>
#include <type_traits>

namespace kirchhoff {

/// Resistance matrix of a transformed graph computed from the base graph's
/// matrix by case rules, bypassing linear algebra. The graph member is the
/// materialized transform; its provenance tags map lifted ids back to
/// Original vertices or Inserted vertices with a parent edge.
template <class T>
struct LiftedResistance {
    Graph graph;
    SquareMatrix<T> omega;
};

namespace detail {

/// Fills the full symmetric matrix from an upper-triangle entry rule. For
/// double the rows can be distributed across threads: entries are
/// independent, so the parallel fill is bit-identical to the serial one.
template <class T, class Fn>
void fill_symmetric(SquareMatrix<T>& out, const Fn& entry, Parallelism par) {
    const int n = out.order();
    bool use_omp = false;
    if constexpr (std::is_same_v<T, double>) use_omp = (par == Parallelism::OpenMP);
#pragma omp parallel for schedule(dynamic, 4) if (use_omp)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out(i, j) = entry(i, j);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) out(i, j) = out(j, i);
}

}  // namespace detail

/// Lifts Omega(G) to Omega(S(G)). Case rules, with (k, l) and (p, q) the
/// parent edges of inserted vertices i and j:
///   both original:  2 Omega_ij
///   i inserted:     (1 + 2 Omega_kj + 2 Omega_lj - Omega_kl) / 2
///   both inserted:  (2 + Omega_pk + Omega_qk + Omega_pl + Omega_ql
///                      - Omega_kl - Omega_pq) / 2
template <class T>
LiftedResistance<T> lift_subdivision(const Graph& g, const SquareMatrix<T>& omega,
                                     Parallelism par = Parallelism::Serial) {
    require_order(omega, g.vertex_count(), "base resistance matrix vs graph");
    const int n = g.vertex_count();
    LiftedResistance<T> lifted{subdivide(g), SquareMatrix<T>(n + g.edge_count())};
    const Graph& s = lifted.graph;
    const auto entry = [&](int i, int j) -> T {
        if (i < n && j < n) return T(2) * omega(i, j);
        if (i < n) {
            const auto [k, l] = s.parent_edge(j);
            return (T(1) + T(2) * omega(k, i) + T(2) * omega(l, i) - omega(k, l)) / T(2);
        }
        if (j < n) {
            const auto [k, l] = s.parent_edge(i);
            return (T(1) + T(2) * omega(k, j) + T(2) * omega(l, j) - omega(k, l)) / T(2);
        }
        const auto [k, l] = s.parent_edge(i);
        const auto [p, q] = s.parent_edge(j);
        return (T(2) + omega(p, k) + omega(q, k) + omega(p, l) + omega(q, l) - omega(k, l) -
                omega(p, q)) /
               T(2);
    };
    detail::fill_symmetric(lifted.omega, entry, par);
    return lifted;
}

/// Lifts Omega(G) to Omega(T(G)). Case rules:
///   both original:  (2/3) Omega_ij
///   i inserted:     1/2 + Omega_kj/3 + Omega_lj/3 - Omega_kl/6
///   both inserted:  1 + (Omega_pk + Omega_qk + Omega_pl + Omega_ql
///                        - Omega_kl - Omega_pq) / 6
template <class T>
LiftedResistance<T> lift_triangulation(const Graph& g, const SquareMatrix<T>& omega,
                                       Parallelism par = Parallelism::Serial) {
    require_order(omega, g.vertex_count(), "base resistance matrix vs graph");
    const int n = g.vertex_count();
    LiftedResistance<T> lifted{triangulate(g), SquareMatrix<T>(n + g.edge_count())};
    const Graph& t = lifted.graph;
    const auto entry = [&](int i, int j) -> T {
        if (i < n && j < n) return frac<T>(2, 3) * omega(i, j);
        if (i < n) {
            const auto [k, l] = t.parent_edge(j);
            return frac<T>(1, 2) + omega(k, i) / T(3) + omega(l, i) / T(3) - omega(k, l) / T(6);
        }
        if (j < n) {
            const auto [k, l] = t.parent_edge(i);
            return frac<T>(1, 2) + omega(k, j) / T(3) + omega(l, j) / T(3) - omega(k, l) / T(6);
        }
        const auto [k, l] = t.parent_edge(i);
        const auto [p, q] = t.parent_edge(j);
        return T(1) + (omega(p, k) + omega(q, k) + omega(p, l) + omega(q, l) - omega(k, l) -
                       omega(p, q)) /
                          T(6);
    };
    detail::fill_symmetric(lifted.omega, entry, par);
    return lifted;
}

/// The three proof-internal partial sums over a subdivision's resistance
/// matrix, in the order:
///   [0] sum over inserted x original pairs of Omega
///   [1] same sum weighted by the original vertex's base degree
///   [2] sum over unordered inserted pairs of Omega
/// The matrix may come from lift_subdivision or from the brute-force oracle
/// of the materialized S(G); only the id layout must match subdivide(g).
template <class T>
std::array<T, 3> partial_sums_subdivision(const Graph& g, const LiftedResistance<T>& lifted) {
    const int n = g.vertex_count();
    const int total = n + g.edge_count();
    if (lifted.graph.vertex_count() != total)
        throw DimensionMismatch("lifted graph vs subdivide(g)", lifted.graph.vertex_count(), total);
    require_order(lifted.omega, total, "lifted resistance matrix");
    Accumulator<T> plain, weighted, inserted_pairs;
    for (int i = n; i < total; ++i) {
        for (int j = 0; j < n; ++j) {
            plain.add(lifted.omega(i, j));
            weighted.add(T(g.degree(j)) * lifted.omega(i, j));
        }
    }
    for (int i = n; i < total; ++i)
        for (int j = i + 1; j < total; ++j) inserted_pairs.add(lifted.omega(i, j));
    return {plain.total(), weighted.total(), inserted_pairs.total()};
}

/// Closed forms the three partial sums must equal, from the base data alone:
///   [0] R+ + (mn - n^2 + n)/2
///   [1] 2 R* + m^2 - m(n - 1)
///   [2] R*/2 + m(m - n)/2
template <class T>
std::array<T, 3> partial_sums_closed_forms(std::int64_t n, std::int64_t m,
                                           const InvariantTriple<T>& base) {
    return {
        base.additive + frac<T>(m * n - n * n + n, 2),
        T(2) * base.multiplicative + T(m * m - m * (n - 1)),
        base.multiplicative / T(2) + frac<T>(m * (m - n), 2),
    };
}

}  // namespace kirchhoff
