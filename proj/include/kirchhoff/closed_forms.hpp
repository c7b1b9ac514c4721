#pragma once

#include "kirchhoff/errors.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/invariants.hpp"
#include "kirchhoff/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace kirchhoff {

/// Base data every closed form consumes: the graph's size pair and its
/// invariant triple.
template <class T>
struct ClosedFormInput {
    std::int64_t n = 0;
    std::int64_t m = 0;
    InvariantTriple<T> triple{};
};

template <class T>
ClosedFormInput<T> closed_form_input(const Graph& g, const InvariantTriple<T>& triple) {
    return {g.vertex_count(), g.edge_count(), triple};
}

/// Throws std::invalid_argument unless (n, m) could belong to a connected
/// simple graph and the triple is positive.
template <class T>
void validate_closed_form_input(const ClosedFormInput<T>& in) {
    if (in.n < 2) throw std::invalid_argument("closed-form input: n must be >= 2");
    if (in.m < in.n - 1 || 2 * in.m > in.n * (in.n - 1))
        throw std::invalid_argument("closed-form input: m outside [n-1, n(n-1)/2]");
    if (!(in.triple.kirchhoff > T(0)) || !(in.triple.additive > T(0)) ||
        !(in.triple.multiplicative > T(0)))
        throw std::invalid_argument("closed-form input: triple must be positive");
}

/// Iterated closed forms refuse beyond this exponent rather than risk the
/// 9^k coefficient terms degrading silently.
inline constexpr int kMaxIterationExponent = 20;

namespace detail {

inline void check_iteration_exponent(int k) {
    if (k < 0) throw std::invalid_argument("iteration depth k must be >= 0");
    if (k > kMaxIterationExponent)
        throw SizeOverflow("iteration depth " + std::to_string(k) + " exceeds the closed-form cap of " +
                           std::to_string(kMaxIterationExponent));
}

}  // namespace detail

// ---- one-step closed forms -------------------------------------------------

/// Invariants of S(G) from those of G:
///   R(S)  = 2R + R+ + R*/2 + (m^2 - n^2 + n)/2
///   R+(S) = 4R+ + 4R* + (m+n)(m-n+1) + 2m(m-n)
///   R*(S) = 8R* + 2m(2m - 2n + 1)
template <class T>
InvariantTriple<T> subdivision_closed_forms(const ClosedFormInput<T>& in) {
    const std::int64_t n = in.n, m = in.m;
    const T r = in.triple.kirchhoff, rp = in.triple.additive, rs = in.triple.multiplicative;
    return {
        T(2) * r + rp + rs / T(2) + frac<T>(m * m - n * n + n, 2),
        T(4) * rp + T(4) * rs + T((m + n) * (m - n + 1)) + T(2 * m * (m - n)),
        T(8) * rs + T(2 * m * (2 * m - 2 * n + 1)),
    };
}

/// Invariants of T(G) from those of G:
///   R(T)  = (2/3)R + (1/3)R+ + (1/6)R* + (3m^2 - n^2 + 2mn - 2m + n)/6
///   R+(T) = 2R+ + 2R* + (12m^2 - mn - n^2 - 2m + n)/3
///   R*(T) = 6R* + 6m^2 - 2mn
template <class T>
InvariantTriple<T> triangulation_closed_forms(const ClosedFormInput<T>& in) {
    const std::int64_t n = in.n, m = in.m;
    const T r = in.triple.kirchhoff, rp = in.triple.additive, rs = in.triple.multiplicative;
    return {
        frac<T>(2, 3) * r + rp / T(3) + rs / T(6) +
            frac<T>(3 * m * m - n * n + 2 * m * n - 2 * m + n, 6),
        T(2) * rp + T(2) * rs + frac<T>(12 * m * m - m * n - n * n - 2 * m + n, 3),
        T(6) * rs + T(6 * m * m - 2 * m * n),
    };
}

/// Invariants of T(G) from those of S(G) (same base sizes n, m):
///   R(T)  = R(S)/3 + m(m + n - 1)/3
///   R+(T) = R+(S)/2 + (15m^2 + n^2 + 4mn - 7m - n)/6
///   R*(T) = (3/4)R*(S) + 3m^2 + mn - (3/2)m
/// Composing these with subdivision_closed_forms reproduces
/// triangulation_closed_forms identically.
template <class T>
InvariantTriple<T> st_comparison(const InvariantTriple<T>& s_triple, std::int64_t n,
                                 std::int64_t m) {
    return {
        s_triple.kirchhoff / T(3) + frac<T>(m * (m + n - 1), 3),
        s_triple.additive / T(2) + frac<T>(15 * m * m + n * n + 4 * m * n - 7 * m - n, 6),
        frac<T>(3, 4) * s_triple.multiplicative + T(3 * m * m + m * n) - frac<T>(3 * m, 2),
    };
}

// ---- iterated closed forms ---------------------------------------------------

/// Invariants of S^k(G), directly from the base data (no loop over k-steps):
///   with A = m(2m - 2n + 1), B = (m - n)(m - n + 1):
///   R*(S^k) = 8^k R* + ((8^k - 2^k)/3) A
///   R+(S^k) = 4^k R+ + (8^k - 4^k) R* + ((8^k - 2^k)/3) A - ((4^k - 1)/3) B
///   R(S^k)  = 2^k R + ((4^k - 2^k)/2) R+ + ((8^k - 2*4^k + 2^k)/4) R*
///             + ((8^k - 2^k)/12) A - ((4^k - 1)/6) B
template <class T>
InvariantTriple<T> iterated_subdivision_closed_forms(const ClosedFormInput<T>& in, int k) {
    detail::check_iteration_exponent(k);
    const std::int64_t n = in.n, m = in.m;
    const T r = in.triple.kirchhoff, rp = in.triple.additive, rs = in.triple.multiplicative;
    const T p2 = pow_int(T(2), k), p4 = pow_int(T(4), k), p8 = pow_int(T(8), k);
    const T a = T(m * (2 * m - 2 * n + 1));
    const T b = T((m - n) * (m - n + 1));
    return {
        p2 * r + (p4 - p2) / T(2) * rp + (p8 - T(2) * p4 + p2) / T(4) * rs +
            (p8 - p2) / T(12) * a - (p4 - T(1)) / T(6) * b,
        p4 * rp + (p8 - p4) * rs + (p8 - p2) / T(3) * a - (p4 - T(1)) / T(3) * b,
        p8 * rs + (p8 - p2) / T(3) * a,
    };
}

/// Invariants of T^k(G), directly from the base data:
///   R*(T^k) = 6^k R* + ((5*9^k - 4*6^k - 3^k)/3) m^2 - (2/3)(6^k - 3^k) mn
///   R+(T^k) = 2^k R+ + ((6^k - 2^k)/2) R*
///             + ((85/84) 9^k - (2/3) 6^k - (1/3) 3^k - (2/21) 2^k + 1/12) m^2
///             - ((1/3) 6^k - (2/3) 3^k + 1/3) mn
///             - ((1/2) 3^k - (1/3) 2^k - 1/6) m - ((2^k - 1)/3)(n^2 - n)
///   R(T^k)  = (2/3)^k R + (2^k - (2/3)^k)/4 R+
///             + ((1/16) 6^k - (1/8) 2^k + (1/16) (2/3)^k) R*
///             + ((25/168) 9^k - (1/12) 6^k - (3/28) 3^k - (1/42) 2^k
///                + (3/28) (2/3)^k - 1/24) m^2
///             + (-(1/24) 6^k + (3/14) 3^k - (19/56) (2/3)^k + 1/6) mn
///             + (-(5/28) 3^k + (1/12) 2^k + (5/28) (2/3)^k - 1/12) m
///             - ((1/12) 2^k - (1/4) (2/3)^k + 1/6)(n^2 - n)
template <class T>
InvariantTriple<T> iterated_triangulation_closed_forms(const ClosedFormInput<T>& in, int k) {
    detail::check_iteration_exponent(k);
    const std::int64_t n = in.n, m = in.m;
    const T r = in.triple.kirchhoff, rp = in.triple.additive, rs = in.triple.multiplicative;
    const T p2 = pow_int(T(2), k), p3 = pow_int(T(3), k);
    const T p6 = pow_int(T(6), k), p9 = pow_int(T(9), k);
    const T p23 = pow_int(frac<T>(2, 3), k);
    const T m2 = T(m * m), mn = T(m * n), nn = T(n * n - n);

    const T r_star = p6 * rs + (T(5) * p9 - T(4) * p6 - p3) / T(3) * m2 -
                     frac<T>(2, 3) * (p6 - p3) * mn;

    const T r_plus = p2 * rp + (p6 - p2) / T(2) * rs +
                     (frac<T>(85, 84) * p9 - frac<T>(2, 3) * p6 - p3 / T(3) -
                      frac<T>(2, 21) * p2 + frac<T>(1, 12)) *
                         m2 -
                     (p6 / T(3) - frac<T>(2, 3) * p3 + frac<T>(1, 3)) * mn -
                     (p3 / T(2) - p2 / T(3) - frac<T>(1, 6)) * T(m) - (p2 - T(1)) / T(3) * nn;

    const T r_plain =
        p23 * r + (p2 - p23) / T(4) * rp +
        (p6 / T(16) - p2 / T(8) + p23 / T(16)) * rs +
        (frac<T>(25, 168) * p9 - p6 / T(12) - frac<T>(3, 28) * p3 - p2 / T(42) +
         frac<T>(3, 28) * p23 - frac<T>(1, 24)) *
            m2 +
        (frac<T>(3, 14) * p3 - p6 / T(24) - frac<T>(19, 56) * p23 + frac<T>(1, 6)) * mn +
        (p2 / T(12) - frac<T>(5, 28) * p3 + frac<T>(5, 28) * p23 - frac<T>(1, 12)) * T(m) -
        (p2 / T(12) - p23 / T(4) + frac<T>(1, 6)) * nn;

    return {r_plain, r_plus, r_star};
}

// ---- regular-graph specialization -------------------------------------------

/// For an r-regular graph, R(T(G)) collapses to
///   ((r+2)^2/6) R + (n^2 - n)(r + 2)/6 + n^2 (r^2 - 4)/8 + n/2.
template <class T>
T regular_triangulation_kirchhoff(std::int64_t n, int r, const T& kirchhoff) {
    const std::int64_t rr = r;
    return frac<T>((rr + 2) * (rr + 2), 6) * kirchhoff + frac<T>((n * n - n) * (rr + 2), 6) +
           frac<T>(n * n * (rr * rr - 4), 8) + frac<T>(n, 2);
}

// ---- linear recurrences -------------------------------------------------------

/// First-order linear recurrence y_{k+1} = f_k y_k + g_k with evaluable
/// coefficient sequences.
template <class T>
struct RecurrenceSpec {
    T y0{};
    std::function<T(int)> multiplier;  // f_k
    std::function<T(int)> addend;      // g_k
};

/// Product-sum solution: y_k = (y0 + sum_i h_i) * prod_j f_j with
/// h_i = g_i / prod_{j<=i} f_j. Throws ZeroMultiplier if any evaluated
/// f_i is zero.
template <class T>
T solve_linear_recurrence(const RecurrenceSpec<T>& spec, int k) {
    if (k < 0) throw std::invalid_argument("recurrence depth k must be >= 0");
    T product(1);
    T h_sum(0);
    for (int i = 0; i < k; ++i) {
        const T f = spec.multiplier(i);
        if (f == T(0)) throw ZeroMultiplier(i);
        product *= f;
        h_sum += spec.addend(i) / product;
    }
    return (spec.y0 + h_sum) * product;
}

/// Naive forward iteration of the same recurrence; the test oracle for
/// solve_linear_recurrence.
template <class T>
T iterate_linear_recurrence(const RecurrenceSpec<T>& spec, int k) {
    if (k < 0) throw std::invalid_argument("recurrence depth k must be >= 0");
    T y = spec.y0;
    for (int i = 0; i < k; ++i) y = spec.multiplier(i) * y + spec.addend(i);
    return y;
}

}  // namespace kirchhoff
