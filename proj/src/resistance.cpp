#include "kirchhoff/resistance.hpp"

#include <cstdio>
#include <ostream>
#include <type_traits>

namespace kirchhoff {

SquareMatrix<double> resistance_matrix(const Graph& g, Parallelism par) {
    return resistance_matrix_impl<double>(g, par);
}

SquareMatrix<Rational> resistance_matrix_exact(const Graph& g, int vertex_cap) {
    if (g.vertex_count() > vertex_cap) {
        throw SizeOverflow("exact-rational oracle limited to " + std::to_string(vertex_cap) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    return resistance_matrix_impl<Rational>(g, Parallelism::Serial);
}

namespace {

void write_csv_value(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

template <class T>
void write_csv(std::ostream& out, const SquareMatrix<T>& m) {
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out << ',';
            write_csv_value(out, to_double(m(i, j)));
        }
        out << '\n';
    }
}

}  // namespace

void write_matrix_csv(std::ostream& out, const SquareMatrix<double>& m) { write_csv(out, m); }
void write_matrix_csv(std::ostream& out, const SquareMatrix<Rational>& m) { write_csv(out, m); }

}  // namespace kirchhoff
