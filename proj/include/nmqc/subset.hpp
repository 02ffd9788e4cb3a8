#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nmqc {

// Variable subsets are bitmasks; bit i stands for variable x_{i+1}.
// 128 bits so that wide symmetric instances (e.g. n = 128) fit.
using mask_t = unsigned __int128;

constexpr int kMaxVars = 128;

inline int popcount(mask_t m) {
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
}

inline mask_t full_mask(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
    if (n == 0) return 0;
    return (~mask_t{0}) >> (kMaxVars - n);
}

inline mask_t bit(int i) { return mask_t{1} << i; }

// Strict order on equal-size subsets matching lexicographic order of their
// sorted index tuples: the lowest differing variable decides.
inline bool lex_less(mask_t a, mask_t b) {
    mask_t d = a ^ b;
    if (d == 0) return false;
    mask_t low = d & (~d + 1);
    return (a & low) != 0;
}

// Canonical term order: smaller size first, then lexicographic.
inline bool canonical_less(mask_t a, mask_t b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
}

inline std::vector<int> mask_indices(mask_t m) {
    std::vector<int> out;
    for (int i = 0; i < kMaxVars && m; ++i) {
        if (m & 1) out.push_back(i + 1);
        m >>= 1;
    }
    return out;
}

inline mask_t mask_from_indices(const std::vector<int>& idxs, int n) {
    mask_t m = 0;
    for (int i : idxs) {
        if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
        m |= bit(i - 1);
    }
    return m;
}

// Enumerates all size-k subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(mask_t{0});
        return;
    }
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        mask_t m = 0;
        for (int p : pos) m |= bit(p);
        fn(m);
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace nmqc
