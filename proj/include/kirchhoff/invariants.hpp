#pragma once

#include "kirchhoff/graph.hpp"
#include "kirchhoff/kernels.hpp"
#include "kirchhoff/matrix.hpp"
#include "kirchhoff/rational.hpp"

namespace kirchhoff {

/// The three resistance-based graph invariants:
///   kirchhoff       R  = sum over unordered pairs of Omega_ij
///   additive        R+ = sum of (d_i + d_j) Omega_ij
///   multiplicative  R* = sum of d_i d_j Omega_ij
template <class T>
struct InvariantTriple {
    T kirchhoff{};
    T additive{};
    T multiplicative{};

    bool operator==(const InvariantTriple&) const = default;
};

/// Computes the triple from a graph and its resistance matrix. Pairs are
/// accumulated in fixed lexicographic order (compensated for double), so
/// results are bit-reproducible per backend.
template <class T>
InvariantTriple<T> compute_invariants(const Graph& g, const SquareMatrix<T>& omega) {
    require_order(omega, g.vertex_count(), "resistance matrix vs graph");
    const int n = g.vertex_count();
    Accumulator<T> r, rp, rs;
    for (int i = 0; i < n; ++i) {
        const T di = T(g.degree(i));
        for (int j = i + 1; j < n; ++j) {
            const T dj = T(g.degree(j));
            const T w = omega(i, j);
            r.add(w);
            rp.add((di + dj) * w);
            rs.add(di * dj * w);
        }
    }
    return {r.total(), rp.total(), rs.total()};
}

template <class T>
InvariantTriple<double> to_double_triple(const InvariantTriple<T>& t) {
    return {to_double(t.kirchhoff), to_double(t.additive), to_double(t.multiplicative)};
}

}  // namespace kirchhoff
