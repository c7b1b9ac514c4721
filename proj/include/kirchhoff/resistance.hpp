#pragma once

#include "kirchhoff/graph.hpp"
#include "kirchhoff/kernels.hpp"
#include "kirchhoff/matrix.hpp"
#include "kirchhoff/rational.hpp"

#include <iosfwd>

namespace kirchhoff {

enum class BackendKind { FloatRegularized, ExactRational };

/// Numeric policy: which scalar computes the oracle, and the relative
/// tolerance used when comparing float results.
struct NumericBackend {
    BackendKind kind = BackendKind::FloatRegularized;
    double tolerance = 1e-9;
};

/// Default vertex limit for the exact-rational oracle (entry growth makes
/// exact inverses expensive well before memory limits hit).
inline constexpr int kDefaultRationalVertexCap = 64;

/// Graph Laplacian L = D - A in the requested scalar type.
template <class T>
SquareMatrix<T> laplacian(const Graph& g) {
    SquareMatrix<T> l(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        l(u, u) += T(1);
        l(v, v) += T(1);
        l(u, v) -= T(1);
        l(v, u) -= T(1);
    }
    return l;
}

/// Resistance matrix by the pseudoinverse identity: with
/// M = (L + J/n)^{-1} - J/n, the pairwise resistance is
/// Omega_ij = M_ii + M_jj - 2 M_ij. The J/n shift cancels in that
/// combination, so Omega is assembled directly from X = (L + J/n)^{-1};
/// the symmetric form X_ii + X_jj - X_ij - X_ji keeps Omega exactly
/// symmetric under floating point.
template <class T>
SquareMatrix<T> resistance_matrix_impl(const Graph& g, Parallelism par) {
    const int n = g.vertex_count();
    SquareMatrix<T> b = laplacian<T>(g);
    const T shift = T(1) / T(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) += shift;

    SquareMatrix<T> x(n);
    if constexpr (std::is_same_v<T, double>) {
        x = ldlt_inverse_of(std::move(b), par);
    } else {
        (void)par;  // exact scalars always run the serial reference kernels
        ldlt_factor_serial(b);
        x = ldlt_inverse_serial(b);
    }

    SquareMatrix<T> omega(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const T w = x(i, i) + x(j, j) - x(i, j) - x(j, i);
            omega(i, j) = w;
            omega(j, i) = w;
        }
    }
    return omega;
}

/// Float oracle (regularized pseudoinverse, OpenMP by default).
SquareMatrix<double> resistance_matrix(const Graph& g,
                                       Parallelism par = Parallelism::OpenMP);

/// Exact-rational oracle. Throws SizeOverflow when the graph exceeds
/// vertex_cap (default 64) to keep exact-inverse entry growth in check.
SquareMatrix<Rational> resistance_matrix_exact(const Graph& g,
                                               int vertex_cap = kDefaultRationalVertexCap);

/// Sum of resistances over adjacent pairs; equals n - 1 on every connected
/// graph, which callers assert.
template <class T>
T foster_sum(const Graph& g, const SquareMatrix<T>& omega) {
    require_order(omega, g.vertex_count(), "resistance matrix vs graph");
    Accumulator<T> acc;
    for (const auto& [u, v] : g.edges()) acc.add(omega(u, v));
    return acc.total();
}

/// CSV export: full symmetric matrix, row-major, one row per line,
/// 17-significant-digit decimal (round-trips double exactly).
void write_matrix_csv(std::ostream& out, const SquareMatrix<double>& m);
void write_matrix_csv(std::ostream& out, const SquareMatrix<Rational>& m);

}  // namespace kirchhoff
