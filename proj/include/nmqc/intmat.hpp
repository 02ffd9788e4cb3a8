#pragma once

#include <vector>

#include "nmqc/rational.hpp"

namespace nmqc {

// Dense integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const Int& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntegerMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, non-negative,
// each entry dividing the next, zeros last.
struct SnfDecomposition {
    IntegerMatrix u, d, v;
    std::vector<Int> diag() const;
};

SnfDecomposition smith_normal_form(const IntegerMatrix& a);

}  // namespace nmqc
