#pragma once

#include "kirchhoff/errors.hpp"
#include "kirchhoff/matrix.hpp"

#include <cmath>
#include <vector>

namespace kirchhoff {

/// Selects between the serial reference kernels and the OpenMP ones.
/// Both produce bit-identical results (every output entry is computed by the
/// same arithmetic expression in the same order; threads only partition
/// independent entries), which the test suite asserts.
enum class Parallelism { Serial, OpenMP };

// ---- serial reference kernels (templated over the scalar) -----------------

/// In-place LDL^T factorization of a symmetric positive definite matrix.
/// On return the strict lower triangle holds the unit-lower factor L and the
/// diagonal holds D. The strict upper triangle is left untouched and must be
/// ignored by consumers. Throws SingularSystem on a non-positive pivot.
template <class T>
void ldlt_factor_serial(SquareMatrix<T>& a) {
    const int n = a.order();
    for (int k = 0; k < n; ++k) {
        const T d = a(k, k);
        if (!(d > T(0))) throw SingularSystem(k);
        for (int i = k + 1; i < n; ++i) {
            a(i, k) /= d;
        }
        for (int i = k + 1; i < n; ++i) {
            const T lik = a(i, k);
            for (int j = k + 1; j <= i; ++j) {
                a(i, j) -= lik * a(j, k) * d;
            }
        }
    }
}

/// Solves factored * x = unit vector e_c for one column c of the inverse,
/// writing into column c of out. factored must come from ldlt_factor_*.
template <class T>
void ldlt_inverse_column(const SquareMatrix<T>& factored, int c, SquareMatrix<T>& out) {
    const int n = factored.order();
    std::vector<T> x(static_cast<std::size_t>(n), T(0));
    x[c] = T(1);
    for (int i = 0; i < n; ++i) {
        T s = x[i];
        for (int j = 0; j < i; ++j) s -= factored(i, j) * x[j];
        x[i] = s;
    }
    for (int i = 0; i < n; ++i) x[i] /= factored(i, i);
    for (int i = n - 1; i >= 0; --i) {
        T s = x[i];
        for (int j = i + 1; j < n; ++j) s -= factored(j, i) * x[j];
        x[i] = s;
    }
    for (int i = 0; i < n; ++i) out(i, c) = x[i];
}

/// Full inverse from a factorization, one column at a time.
template <class T>
SquareMatrix<T> ldlt_inverse_serial(const SquareMatrix<T>& factored) {
    const int n = factored.order();
    SquareMatrix<T> out(n);
    for (int c = 0; c < n; ++c) ldlt_inverse_column(factored, c, out);
    return out;
}

// ---- OpenMP kernels (double only) ------------------------------------------

/// OpenMP variant of ldlt_factor_serial; same arithmetic per entry, rows of
/// each trailing update distributed across threads.
void ldlt_factor_parallel(SquareMatrix<double>& a);

/// OpenMP variant of ldlt_inverse_serial; independent columns distributed
/// across threads.
SquareMatrix<double> ldlt_inverse_parallel(const SquareMatrix<double>& factored);

/// Convenience dispatcher used by the resistance pipeline.
SquareMatrix<double> ldlt_inverse_of(SquareMatrix<double> a, Parallelism par);

// ---- compensated accumulation ----------------------------------------------

/// Accumulator with a fixed, order-dependent result. The double
/// specialization uses Neumaier compensation so pair sums are reproducible
/// and accurate; exact scalars accumulate directly.
template <class T>
class Accumulator {
public:
    void add(const T& x) { sum_ += x; }
    T total() const { return sum_; }

private:
    T sum_ = T(0);
};

template <>
class Accumulator<double> {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double total() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace kirchhoff
