#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmqc/boolfn.hpp"
#include "nmqc/rational.hpp"
#include "nmqc/subset.hpp"

namespace nmqc {

// Multilinear polynomial in the parity-character basis: each term maps a
// variable subset S to a rational coefficient on chi_S(x) = (-1)^{sum x_i},
// the empty subset holding the constant. A polynomial represents a Boolean
// function f when its value at every input is an integer congruent to f(x)
// mod 2.
class MultilinearPoly {
public:
    using TermMap = std::map<mask_t, Rat, bool (*)(mask_t, mask_t)>;

    MultilinearPoly() = default;
    explicit MultilinearPoly(int n);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }

    Rat coeff(mask_t s) const;
    void set_coeff(mask_t s, const Rat& c);       // erases on zero
    void add_term(mask_t s, const Rat& c);

    MultilinearPoly& operator+=(const MultilinearPoly& o);
    MultilinearPoly operator+(const MultilinearPoly& o) const;
    MultilinearPoly operator-() const;
    MultilinearPoly scaled(const Rat& c) const;
    MultilinearPoly operator*(const MultilinearPoly& o) const;  // chi_S chi_T = chi_{S xor T}

    Rat evaluate(mask_t x) const;

    // Number of nonzero non-constant terms (the qubit count it induces).
    int sparsity() const;

    // Largest power of two needed across doubled coefficients: max over
    // stored terms of the 2-adic denominator exponent of 2c. Throws when a
    // doubled coefficient is non-dyadic.
    int granularity() const;

    bool is_symmetric() const;
    // Per-size-class coefficients, index = |S|, entry 0 = constant. Only
    // valid for symmetric polynomials.
    std::vector<Rat> to_profile() const;
    static MultilinearPoly from_profile(int n, const std::vector<Rat>& profile);

    std::string to_json() const;
    static MultilinearPoly from_json(const std::string& text);

private:
    int n_ = 0;
    TermMap terms_{canonical_less};
};

// 2-adic denominator exponent of a single coefficient as stored.
int granularity_of(const Rat& c);

// Checks p(x) is an integer congruent to f(x) mod 2 at every input.
// Exhaustive for dense functions; per-weight class sums for symmetric ones.
// Wide non-symmetric functions are spot-checked at `samples` random inputs
// when exhaustive evaluation is out of reach.
bool verify_mod2(const MultilinearPoly& p, const BooleanFunction& f);
bool verify_mod2(const MultilinearPoly& p, const SymmetricFunction& f);
bool verify_mod2_sampled(const MultilinearPoly& p, const Fn& f, int samples,
                         std::uint64_t seed);

// Representatives of the complete symmetric functions whose degree is a
// power of two, built from binomial closed forms. Valid for k in
// {1,2,4,8,16,32,64} with k <= n; value at weight w is binom(floor(w/2), k/2)
// for even k, and the parity polynomial (1 - chi_{[n]})/2 for k = 1.
MultilinearPoly csf_power2_poly(int k, int n);

}  // namespace nmqc
