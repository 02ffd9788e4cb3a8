#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nmqc/boolfn.hpp"

using namespace nmqc;

TEST_CASE("subset helpers order terms by size then lowest index") {
    mask_t s12 = mask_from_indices({1, 2}, 3);
    mask_t s23 = mask_from_indices({2, 3}, 3);
    CHECK(lex_less(s12, s23));
    CHECK(!lex_less(s23, s12));
    CHECK(canonical_less(bit(2), s12));
    CHECK(mask_indices(s23) == std::vector<int>{2, 3});
    CHECK(popcount(full_mask(128)) == 128);
    CHECK(full_mask(0) == 0);

    int count = 0;
    mask_t first = 0, last = 0;
    for_each_subset_of_size(5, 3, [&](mask_t m) {
        if (count == 0) first = m;
        last = m;
        ++count;
    });
    CHECK(count == 10);
    CHECK(first == mask_from_indices({1, 2, 3}, 5));
    CHECK(last == mask_from_indices({3, 4, 5}, 5));
}

TEST_CASE("symmetric value vectors evaluate by weight") {
    SymmetricFunction andf = SymmetricFunction::all_and(3);
    CHECK(andf.eval(full_mask(3)));
    CHECK(!andf.eval(mask_from_indices({1, 3}, 3)));

    SymmetricFunction par = SymmetricFunction::parity(4);
    CHECK(par.eval(bit(2)));
    CHECK(!par.eval(mask_from_indices({1, 4}, 4)));

    SymmetricFunction c24 = SymmetricFunction::csf(2, 4);
    // binom(w,2) mod 2 over w = 0..4: 0,0,1,1,0
    CHECK(c24.values() == std::vector<std::uint8_t>{0, 0, 1, 1, 0});

    SymmetricFunction cnt = SymmetricFunction::count_multiple(3, 6);
    CHECK(cnt.values() == std::vector<std::uint8_t>{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("complete symmetric peel recovers the component sizes") {
    // C^5 at n=6 is its own single component
    CHECK(SymmetricFunction::csf(5, 6).anf_class_sizes() == std::vector<int>{5});
    CHECK(SymmetricFunction::csf(5, 6).degree() == 5);
    // parity xor AND at n=3: weights 0,1,2,3 -> 0,1,0,0 ... peel directly
    SymmetricFunction s(3, {1, 0, 1, 1});
    auto sizes = s.anf_class_sizes();
    std::vector<std::uint8_t> back(4, 0);
    for (int k : sizes)
        for (int w = 0; w <= 3; ++w) {
            bool odd = (static_cast<unsigned>(w) & static_cast<unsigned>(k)) ==
                       static_cast<unsigned>(k);
            back[w] ^= odd ? 1 : 0;
        }
    CHECK(back == s.values());
}

TEST_CASE("truth tables round-trip through the algebraic normal form") {
    auto m12 = mask_from_indices({1, 2}, 3);
    auto m23 = mask_from_indices({2, 3}, 3);
    BooleanFunction f = truth_from_anf(3, {m12, m23});
    CHECK(f.eval(m12));
    CHECK(f.eval(m23));
    CHECK(!f.eval(full_mask(3)));
    CHECK(anf_from_truth(f) == std::vector<mask_t>{m12, m23});

    // every 4-input table with a constant term round-trips
    BooleanFunction g = BooleanFunction::from_table_hex("6a");
    auto anf = g.anf();
    CHECK(truth_from_anf(3, anf) == g);
}

TEST_CASE("hex tables load low nibble first") {
    // "e1": digit e covers inputs 0..3, digit 1 covers 4..7, low bit first
    BooleanFunction f = BooleanFunction::from_table_hex("e1");
    CHECK(f.table_bits_string() == "01111000");
    CHECK(!f.eval(0));
    CHECK(f.eval(bit(0)));
}

TEST_CASE("symmetry detection and conversion") {
    BooleanFunction f = BooleanFunction::from_symmetric(SymmetricFunction::csf(2, 4));
    CHECK(f.is_symmetric());
    auto s = f.to_symmetric();
    REQUIRE(s.has_value());
    CHECK(s->values() == std::vector<std::uint8_t>{0, 0, 1, 1, 0});

    BooleanFunction g = truth_from_anf(3, {bit(0)});
    CHECK(!g.is_symmetric());
    CHECK(!g.to_symmetric().has_value());
}

TEST_CASE("binary decomposition of complete symmetric degrees") {
    CHECK(decompose_csf(5) == std::vector<int>{0, 2});
    CHECK(decompose_csf(8) == std::vector<int>{3});
    CHECK(decompose_csf(1) == std::vector<int>{0});
    CHECK_THROWS_AS(decompose_csf(0), std::invalid_argument);
}

TEST_CASE("symmetrization collects monomial size classes") {
    // x1x2 + x2x3 has only size-2 monomials
    BooleanFunction f =
        truth_from_anf(3, {mask_from_indices({1, 2}, 3), mask_from_indices({2, 3}, 3)});
    SymmetricFunction z = zeta_c(f);
    CHECK(z.values() == SymmetricFunction::csf(2, 3).values());

    BooleanFunction ft = complement_tilde(f, z);
    CHECK(anf_from_truth(ft) == std::vector<mask_t>{mask_from_indices({1, 3}, 3)});
}

TEST_CASE("pointwise products of complete symmetric components") {
    // C^5 = C^1 * C^4 pointwise at every weight (binary digits of 5)
    for (int n = 5; n <= 9; ++n) {
        auto c5 = SymmetricFunction::csf(5, n);
        auto c1 = SymmetricFunction::csf(1, n);
        auto c4 = SymmetricFunction::csf(4, n);
        for (int w = 0; w <= n; ++w)
            CHECK(c5.value_at_weight(w) ==
                  (c1.value_at_weight(w) && c4.value_at_weight(w)));
    }
}

TEST_CASE("count-of-multiples matches the product of negated components") {
    // |x| divisible by 8 iff the three lowest binary digits of |x| vanish
    auto cnt = SymmetricFunction::count_multiple(8, 12);
    for (int w = 0; w <= 12; ++w) {
        bool want = !SymmetricFunction::csf(1, 12).value_at_weight(w) &&
                    !SymmetricFunction::csf(2, 12).value_at_weight(w) &&
                    !SymmetricFunction::csf(4, 12).value_at_weight(w);
        CHECK(cnt.value_at_weight(w) == want);
    }
}

TEST_CASE("function spec grammar") {
    Fn f = parse_fn("anf: x1*x2 + x2*x3");
    CHECK(f.n == 3);
    CHECK(f.eval(mask_from_indices({1, 2}, 3)));
    CHECK(!f.eval(full_mask(3)));

    Fn g = parse_fn("builtin:AND:4");
    CHECK(g.n == 4);
    CHECK(g.eval(full_mask(4)));
    CHECK(!g.eval(bit(0)));

    Fn c = parse_fn("builtin:C:2:5");
    CHECK(c.sym.has_value());
    CHECK(c.eval(mask_from_indices({2, 4}, 5)));

    Fn t = parse_fn("tt: 8");
    CHECK(t.n == 2);
    CHECK(t.eval(full_mask(2)));
    CHECK(!t.eval(bit(1)));

    Fn s = parse_fn("sym:0,1,0");
    CHECK(s.n == 2);
    CHECK(s.eval(bit(1)));

    Fn one = parse_fn("anf: 1 + x1");
    CHECK(one.eval(0));
    CHECK(!one.eval(bit(0)));

    // duplicate monomials cancel
    Fn dup = parse_fn("anf: x1 + x1");
    CHECK(dup.anf->empty());

    Fn ac = parse_fn("builtin:AC:2:4:1");
    CHECK(ac.anf->size() == 5);  // binom(4,2) - 1

    CHECK_THROWS_AS(parse_fn("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn("builtin:WAT:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn("anf: y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn("sym:"), std::invalid_argument);
}

TEST_CASE("wide symmetric functions stay out of dense tables") {
    Fn f = parse_fn("builtin:C:2:64");
    CHECK(f.n == 64);
    CHECK(!f.dense.has_value());
    CHECK(f.eval(mask_from_indices({10, 60}, 64)));
    CHECK(f.degree() == 2);
    auto& anf = f.ensure_anf();
    CHECK(anf.size() == 64 * 63 / 2);
}
