#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmqc/subset.hpp"

namespace nmqc {

// Symmetric Boolean function as its value-by-Hamming-weight vector.
class SymmetricFunction {
public:
    SymmetricFunction(int n, std::vector<std::uint8_t> values);

    int n() const { return n_; }
    bool value_at_weight(int w) const;
    bool eval(mask_t x) const { return value_at_weight(popcount(x)); }
    const std::vector<std::uint8_t>& values() const { return v_; }

    // Sizes k with a nonzero coefficient in the symmetric algebraic normal
    // form (f = XOR of complete symmetric functions C^k); peeled from the
    // value vector lowest weight first.
    std::vector<int> anf_class_sizes() const;
    int degree() const;

    static SymmetricFunction csf(int k, int n);        // binom(|x|,k) mod 2
    static SymmetricFunction parity(int n);
    static SymmetricFunction all_and(int n);
    static SymmetricFunction count_multiple(int m, int n);  // |x| % m == 0

private:
    int n_;
    std::vector<std::uint8_t> v_;
};

// Dense truth table, little-endian: table bit x is f at input mask x
// (bit i of x is the value of variable x_{i+1}).
class BooleanFunction {
public:
    static constexpr int kMaxDenseVars = 24;

    BooleanFunction(int n, std::vector<std::uint64_t> packed_table);

    static BooleanFunction zero(int n);
    static BooleanFunction from_anf(int n, const std::vector<mask_t>& monomials);
    static BooleanFunction from_table_hex(const std::string& hex);  // low index first
    static BooleanFunction from_symmetric(const SymmetricFunction& s);

    int n() const { return n_; }
    bool eval(mask_t x) const;
    void set(mask_t x, bool v);
    std::size_t table_words() const { return bits_.size(); }
    const std::vector<std::uint64_t>& table() const { return bits_; }
    std::string table_bits_string() const;  // "0001" style, index 0 first

    std::vector<mask_t> anf() const;  // canonical (size, then lex) order
    int degree() const;

    bool is_symmetric() const;
    std::optional<SymmetricFunction> to_symmetric() const;

    bool operator==(const BooleanFunction& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

// Truth table from an ANF monomial list (inverse Moebius transform).
BooleanFunction truth_from_anf(int n, const std::vector<mask_t>& monomials);
// Canonically ordered ANF of a truth table (Moebius transform).
std::vector<mask_t> anf_from_truth(const BooleanFunction& f);

// Power-of-two exponents r with 2^r in the binary decomposition of k.
std::vector<int> decompose_csf(int k);

// Symmetrization: XOR of C^k over the monomial sizes present in f's ANF.
SymmetricFunction zeta_c(const BooleanFunction& f);
std::vector<int> zeta_class_sizes(const std::vector<mask_t>& anf);

// f XOR sym, as a truth table (arity must match).
BooleanFunction complement_tilde(const BooleanFunction& f, const SymmetricFunction& sym);

// A parsed function spec: dense table and/or symmetric view and/or ANF,
// whichever the source form provides directly.
struct Fn {
    int n = 0;
    std::optional<BooleanFunction> dense;
    std::optional<SymmetricFunction> sym;
    std::optional<std::vector<mask_t>> anf;

    bool eval(mask_t x) const;
    // Materializes missing views where feasible (dense needs n <= 24;
    // ANF of a wide symmetric function needs a manageable monomial count).
    const std::vector<mask_t>& ensure_anf();
    const BooleanFunction& ensure_dense();
    int degree() const;
};

// Mini-grammar: "anf: x1*x2 + x2*x3 [+ 1]", "tt: <hex, low index first>",
// "sym: v0,v1,...,vn", "builtin:AND:n", "builtin:PARITY:n", "builtin:C:k:n",
// "builtin:COUNT:m:n", "builtin:AC:k:n:t".
Fn parse_fn(const std::string& spec);

}  // namespace nmqc
