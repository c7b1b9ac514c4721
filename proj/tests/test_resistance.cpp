#include "kirchhoff/corpus.hpp"
#include "kirchhoff/errors.hpp"
#include "kirchhoff/resistance.hpp"

#include "doctest.h"

#include <cmath>

using namespace kirchhoff;

namespace {

constexpr double kTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kTol * (1.0 + std::abs(b)); }

}  // namespace

TEST_CASE("single edge has unit resistance") {
    const auto omega = resistance_matrix(make_path(2));
    CHECK(omega(0, 1) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(omega(0, 0) == 0.0);
    CHECK(omega(1, 1) == 0.0);
}

TEST_CASE("path resistances add like series resistors") {
    const auto omega = resistance_matrix(make_path(4));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(close(omega(i, j), j - i));
}

TEST_CASE("triangle and complete graphs") {
    const auto k3 = resistance_matrix(make_complete(3));
    CHECK(close(k3(0, 1), 2.0 / 3.0));  // 1 Ohm parallel with 2 Ohm
    const auto k4 = resistance_matrix(make_complete(4));
    CHECK(close(k4(0, 3), 0.5));  // 2/n on K_n
    const auto k5 = resistance_matrix(make_complete(5));
    CHECK(close(k5(1, 2), 0.4));
}

TEST_CASE("cycle resistance is a series-parallel split") {
    const auto c4 = resistance_matrix(make_cycle(4));
    CHECK(close(c4(0, 1), 3.0 / 4.0));  // 1 || 3
    CHECK(close(c4(0, 2), 1.0));        // 2 || 2
    const auto c5 = resistance_matrix(make_cycle(5));
    CHECK(close(c5(0, 1), 4.0 / 5.0));
    CHECK(close(c5(0, 2), 6.0 / 5.0));
}

TEST_CASE("resistance matrices are exactly symmetric with zero diagonal") {
    for (const auto& entry : builtin_corpus()) {
        const auto omega = resistance_matrix(entry.graph);
        const int n = omega.order();
        for (int i = 0; i < n; ++i) {
            CHECK(omega(i, i) == 0.0);
            for (int j = i + 1; j < n; ++j) CHECK(omega(i, j) == omega(j, i));
        }
    }
}

TEST_CASE("serial and OpenMP resistance pipelines agree bitwise") {
    for (const auto& entry : builtin_corpus()) {
        CHECK(resistance_matrix(entry.graph, Parallelism::Serial) ==
              resistance_matrix(entry.graph, Parallelism::OpenMP));
    }
}

TEST_CASE("exact backend gives known rationals") {
    const auto k3 = resistance_matrix_exact(make_complete(3));
    CHECK(k3(0, 1) == frac<Rational>(2, 3));
    const auto c5 = resistance_matrix_exact(make_cycle(5));
    CHECK(c5(0, 1) == frac<Rational>(4, 5));
    CHECK(c5(0, 2) == frac<Rational>(6, 5));
    const auto star = resistance_matrix_exact(make_star(3));
    CHECK(star(0, 1) == Rational(1));
    CHECK(star(1, 2) == Rational(2));
}

TEST_CASE("float backend tracks the exact backend") {
    for (const auto& entry : builtin_corpus()) {
        const auto exact = resistance_matrix_exact(entry.graph);
        const auto approx = resistance_matrix(entry.graph);
        const int n = exact.order();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) CHECK(close(approx(i, j), to_double(exact(i, j))));
    }
}

TEST_CASE("exact backend enforces its vertex cap") {
    CHECK_THROWS_AS(resistance_matrix_exact(make_path(10), 8), SizeOverflow);
    CHECK_NOTHROW(resistance_matrix_exact(make_path(8), 8));
}

TEST_CASE("Foster sum equals n - 1") {
    for (const auto& entry : builtin_corpus()) {
        const auto omega = resistance_matrix(entry.graph);
        CHECK(close(foster_sum(entry.graph, omega), entry.graph.vertex_count() - 1));
        const auto exact = resistance_matrix_exact(entry.graph);
        CHECK(foster_sum(entry.graph, exact) == Rational(entry.graph.vertex_count() - 1));
    }
}
