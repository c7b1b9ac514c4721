#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace kirchhoff {

/// Arbitrary-precision rational scalar (GMP-backed). Arithmetic on this type
/// is exact, so equality checks against closed forms are meaningful.
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& x) { return x.str(); }

/// Builds the fraction p/q in the scalar type T (exact for Rational).
template <class T>
T frac(std::int64_t p, std::int64_t q) {
    return T(p) / T(q);
}

/// x^k by repeated multiplication; k is expected to be small (checked by
/// callers against their own iteration caps).
template <class T>
T pow_int(const T& x, int k) {
    T acc(1);
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}

}  // namespace kirchhoff
