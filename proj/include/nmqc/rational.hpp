#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace nmqc {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int binom(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int binom_i(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool mod2(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("mod2 of non-integer");
    return mpz_odd_p(q.get_num().get_mpz_t()) != 0;
}

// 2-adic exponent of the reduced denominator; nullopt when the denominator
// has an odd factor (non-dyadic).
inline std::optional<int> dyadic_exponent(const Rat& q) {
    const Int& d = q.get_den();
    if (d == 1) return 0;
    auto e = mpz_scan1(d.get_mpz_t(), 0);
    if (mpz_sizeinbase(d.get_mpz_t(), 2) != e + 1) return std::nullopt;
    return static_cast<int>(e);
}

inline int granularity(const Rat& q) {
    auto e = dyadic_exponent(q);
    if (!e) throw std::domain_error("granularity undefined for non-dyadic value " + q.get_str());
    return *e;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_str(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace nmqc
