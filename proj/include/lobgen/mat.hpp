#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "lobgen/common.hpp"

namespace lobgen {

// Dense row-major matrix of doubles. The whole reference path is 64-bit.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    size_t size() const { return a.size(); }
    bool empty() const { return a.empty(); }

    void zero() { std::fill(a.begin(), a.end(), 0.0); }
    void resize(int r, int c) {
        rows = r;
        cols = c;
        a.assign(static_cast<size_t>(r) * c, 0.0);
    }

    static Mat randn(int r, int c, double stddev, Rng& rng) {
        Mat m(r, c);
        for (double& v : m.a) v = rng.normal(0.0, stddev);
        return m;
    }
    static Mat full(int r, int c, double value) {
        Mat m(r, c);
        std::fill(m.a.begin(), m.a.end(), value);
        return m;
    }
};

inline void add_inplace(Mat& dst, const Mat& src) {
    assert(dst.rows == src.rows && dst.cols == src.cols);
    for (size_t i = 0; i < dst.a.size(); ++i) dst.a[i] += src.a[i];
}

}  // namespace lobgen
