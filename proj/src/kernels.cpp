#include "kirchhoff/kernels.hpp"

namespace kirchhoff {

// The loop bodies below must stay expression-for-expression identical to the
// serial reference in kernels.hpp: bit-identical output is a tested contract.
// Parallelism only ever partitions independent entries; there are no
// reductions and no order-dependent writes.

void ldlt_factor_parallel(SquareMatrix<double>& a) {
    const int n = a.order();
    for (int k = 0; k < n; ++k) {
        const double d = a(k, k);
        if (!(d > 0.0)) throw SingularSystem(k);
#pragma omp parallel for schedule(static)
        for (int i = k + 1; i < n; ++i) {
            a(i, k) /= d;
        }
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = k + 1; i < n; ++i) {
            const double lik = a(i, k);
            for (int j = k + 1; j <= i; ++j) {
                a(i, j) -= lik * a(j, k) * d;
            }
        }
    }
}

SquareMatrix<double> ldlt_inverse_parallel(const SquareMatrix<double>& factored) {
    const int n = factored.order();
    SquareMatrix<double> out(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (int c = 0; c < n; ++c) {
        ldlt_inverse_column(factored, c, out);
    }
    return out;
}

SquareMatrix<double> ldlt_inverse_of(SquareMatrix<double> a, Parallelism par) {
    if (par == Parallelism::OpenMP) {
        ldlt_factor_parallel(a);
        return ldlt_inverse_parallel(a);
    }
    ldlt_factor_serial(a);
    return ldlt_inverse_serial(a);
}

}  // namespace kirchhoff
