#pragma once

#include "kirchhoff/errors.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kirchhoff {

/// Dense square matrix, row-major storage.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() : order_(0) {}
    explicit SquareMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order, T(0)) {}

    int order() const { return order_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    bool operator==(const SquareMatrix& other) const {
        return order_ == other.order_ && data_ == other.data_;
    }

    static SquareMatrix identity(int order) {
        SquareMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = T(1);
        return m;
    }

private:
    int order_;
    std::vector<T> data_;
};

/// Throws unless the matrix order matches the expected dimension.
template <class T>
void require_order(const SquareMatrix<T>& m, int expected, const char* what) {
    if (m.order() != expected) throw DimensionMismatch(what, m.order(), expected);
}

}  // namespace kirchhoff
