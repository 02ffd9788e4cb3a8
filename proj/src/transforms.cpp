#include "nmqc/transforms.hpp"

#include <stdexcept>

namespace nmqc {

MultilinearPoly walsh_hadamard(const BooleanFunction& f) {
    const int n = f.n();
    const std::size_t size = std::size_t{1} << n;
    std::vector<long> a(size);
    for (std::size_t x = 0; x < size; ++x) a[x] = f.eval(mask_t{x}) ? -1 : 1;
    for (int i = 0; i < n; ++i) {
        std::size_t step = std::size_t{1} << i;
        for (std::size_t x = 0; x < size; ++x)
            if (x & step) {
                long u = a[x ^ step], v = a[x];
                a[x ^ step] = u + v;
                a[x] = u - v;
            }
    }
    MultilinearPoly p(n);
    Rat scale = make_rat(1, 1) / Rat(Int(1) << n);
    for (std::size_t s = 0; s < size; ++s)
        if (a[s] != 0) p.set_coeff(mask_t{s}, Rat(a[s]) * scale);
    return p;
}

Int krawtchouk_entry(int n, int i, int j) {
    Int e = 0;
    for (int k = std::max(0, i + j - n); k <= std::min(i, j); ++k) {
        Int term = binom_i(i, k) * binom_i(n - i, j - k);
        if (k % 2)
            e -= term;
        else
            e += term;
    }
    return e;
}

IntegerMatrix krawtchouk_matrix(int n) {
    IntegerMatrix m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) m(i, j) = krawtchouk_entry(n, i, j);
    return m;
}

std::vector<Rat> krawtchouk_coefficients(int n, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != n + 1)
        throw std::invalid_argument("value vector must have n+1 entries");
    std::vector<Rat> out(n + 1);
    Rat scale = make_rat(1, 1) / Rat(Int(1) << n);
    for (int i = 0; i <= n; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= n; ++j)
            if (v[j] != 0) acc += Rat(krawtchouk_entry(n, i, j)) * v[j];
        out[i] = acc * scale;
    }
    return out;
}

}  // namespace nmqc
