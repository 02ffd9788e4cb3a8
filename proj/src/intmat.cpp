#include "nmqc/intmat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace nmqc {

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

std::vector<Int> IntegerMatrix::operator*(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("matrix shape mismatch");
    std::vector<Int> out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Int> SnfDecomposition::diag() const {
    int m = std::min(d.rows(), d.cols());
    std::vector<Int> out(m);
    for (int i = 0; i < m; ++i) out[i] = d(i, i);
    return out;
}

namespace {

// Quotient minimizing |a - q d|; under floor division remainder and divisor
// share sign, so the correction is always +1.
Int nearest_quotient(const Int& a, const Int& d) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (2 * abs(r) > abs(d)) q += 1;
    return q;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntegerMatrix& a) {
    const int r = a.rows(), c = a.cols();
    SnfDecomposition out{IntegerMatrix::identity(r), a, IntegerMatrix::identity(c)};
    IntegerMatrix& d = out.d;
    IntegerMatrix& u = out.u;
    IntegerMatrix& v = out.v;

    auto swap_rows = [&](int i, int j) {
        for (int x = 0; x < c; ++x) std::swap(d(i, x), d(j, x));
        for (int x = 0; x < r; ++x) std::swap(u(i, x), u(j, x));
    };
    auto swap_cols = [&](int i, int j) {
        for (int x = 0; x < r; ++x) std::swap(d(x, i), d(x, j));
        for (int x = 0; x < c; ++x) std::swap(v(x, i), v(x, j));
    };
    auto add_row = [&](int dst, int src, const Int& q) {
        for (int x = 0; x < c; ++x) d(dst, x) += q * d(src, x);
        for (int x = 0; x < r; ++x) u(dst, x) += q * u(src, x);
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        for (int x = 0; x < r; ++x) d(x, dst) += q * d(x, src);
        for (int x = 0; x < c; ++x) v(x, dst) += q * v(x, src);
    };

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // move the globally smallest nonzero trailing entry to (t, t)
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            const Int pivot = d(t, t);

            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (d(i, t) == 0) continue;
                add_row(i, t, -nearest_quotient(d(i, t), pivot));
                if (d(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < c; ++j) {
                if (d(t, j) == 0) continue;
                add_col(j, t, -nearest_quotient(d(t, j), pivot));
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // fold in a row whose entries the pivot misses, so the pivot
            // sinks to the gcd of the trailing block and divides it all
            int off = -1;
            for (int i = t + 1; i < r && off < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                        off = i;
                        break;
                    }
            if (off < 0) break;
            add_row(t, off, 1);
        }
        if (d(t, t) == 0) break;
    }
    for (int i = 0; i < steps; ++i)
        if (d(i, i) < 0) {
            for (int x = 0; x < c; ++x) d(i, x) = -d(i, x);
            for (int x = 0; x < r; ++x) u(i, x) = -u(i, x);
        }
    return out;
}

}  // namespace nmqc
