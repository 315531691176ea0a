#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "semfuse/nn/rng.hpp"

namespace semfuse::nn {

// Dense row-major matrix. Vectors are 1xN or Nx1, scalars 1x1.
template <typename T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, T(0)) {}
    Mat(int r, int c, std::vector<T> d) : rows(r), cols(c), data(std::move(d)) {
        assert(data.size() == static_cast<size_t>(r) * c);
    }

    static Mat zeros(int r, int c) { return Mat(r, c); }

    static Mat full(int r, int c, T v) {
        Mat m(r, c);
        for (auto& x : m.data) x = v;
        return m;
    }

    static Mat scalar(T v) { return full(1, 1, v); }

    static Mat randn(int r, int c, Rng& rng, double stddev) {
        Mat m(r, c);
        for (auto& x : m.data) x = static_cast<T>(rng.truncated_normal(stddev));
        return m;
    }

    T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    T operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
    bool is_scalar() const { return rows == 1 && cols == 1; }

    void fill(T v) {
        for (auto& x : data) x = v;
    }
};

template <typename To, typename From>
Mat<To> cast(const Mat<From>& m) {
    Mat<To> out(m.rows, m.cols);
    for (size_t i = 0; i < m.data.size(); ++i) out.data[i] = static_cast<To>(m.data[i]);
    return out;
}

} // namespace semfuse::nn
