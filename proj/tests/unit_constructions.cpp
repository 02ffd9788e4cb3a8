#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nmqc/constructions.hpp"
#include "nmqc/transforms.hpp"

using namespace nmqc;

namespace {

Fn fn(const char* spec) { return parse_fn(spec); }

}  // namespace

TEST_CASE("full expansion of the two-variable product") {
    Fn f = fn("builtin:AND:2");
    ConstructionReport r = construct_fr(f);
    CHECK(r.sparsity == 3);
    CHECK(r.granularity == 1);
    CHECK(r.poly.coeff(0) == make_rat(1, 4));
    CHECK(r.poly.coeff(bit(0)) == make_rat(-1, 4));
    CHECK(r.poly.coeff(bit(1)) == make_rat(-1, 4));
    CHECK(r.poly.coeff(full_mask(2)) == make_rat(1, 4));
    CHECK(verify_mod2(r.poly, *f.dense));
}

TEST_CASE("dense and symmetric expansion routes agree") {
    for (const char* spec : {"builtin:C:2:6", "builtin:C:3:5", "builtin:PARITY:7"}) {
        Fn a = fn(spec);
        Fn b = fn(spec);
        b.dense = b.ensure_dense();
        b.sym.reset();
        ConstructionReport ra = construct_fr(a);
        ConstructionReport rb = construct_fr(b);
        CHECK(ra.poly.terms().size() == rb.poly.terms().size());
        for (const auto& [s, c] : ra.poly.terms()) CHECK(rb.poly.coeff(s) == c);
    }
}

TEST_CASE("monomial-sum representative of the product function") {
    // sum over monomials of prod (1 - chi_i)/2 keeps every subset term
    Fn f = fn("builtin:AND:3");
    ConstructionReport r = construct_ef(f);
    CHECK(r.sparsity == 7);
    CHECK(verify_mod2(r.poly, *f.dense));
}

TEST_CASE("greedy signs on x1x2 + x2x3") {
    Fn f = fn("anf: x1*x2 + x2*x3");
    ConstructionReport r = construct_kr(f);
    CHECK(r.method == "kr");
    CHECK(!r.fell_back);
    CHECK(r.sparsity == 4);
    CHECK(r.poly.coeff(0) == 0);
    CHECK(r.poly.coeff(mask_from_indices({1}, 3)) == make_rat(-1, 4));
    CHECK(r.poly.coeff(mask_from_indices({3}, 3)) == make_rat(1, 4));
    CHECK(r.poly.coeff(mask_from_indices({1, 2}, 3)) == make_rat(1, 4));
    CHECK(r.poly.coeff(mask_from_indices({2, 3}, 3)) == make_rat(-1, 4));
    CHECK(r.poly.coeff(mask_from_indices({2}, 3)) == 0);
    CHECK(verify_mod2(r.poly, *f.dense));

    // all-positive route stays denser here
    Fn g = fn("anf: x1*x2 + x2*x3");
    CHECK(construct_ef(g).sparsity == 5);
}

TEST_CASE("complete symmetric route on the fifth degree at six variables") {
    Fn f = fn("builtin:C:5:6");
    ConstructionReport r = construct_csf(f);
    CHECK(r.sparsity == 43);
    CHECK(r.granularity == 4);
    auto prof = r.poly.to_profile();
    CHECK(prof[0] == make_rat(3, 32));
    CHECK(prof[1] == make_rat(-1, 16));
    CHECK(prof[2] == make_rat(1, 32));
    CHECK(prof[3] == 0);
    CHECK(prof[4] == make_rat(-1, 32));
    CHECK(prof[5] == make_rat(1, 16));
    CHECK(prof[6] == make_rat(-3, 32));
    CHECK(verify_mod2(r.poly, *f.sym));

    // the full-expansion route lands on the same polynomial here
    Fn g = fn("builtin:C:5:6");
    ConstructionReport fr = construct_fr(g);
    CHECK(fr.poly.to_profile() == prof);

    // monomial-sum and greedy sparsities, and the structural bound
    Fn h = fn("builtin:C:5:6");
    CHECK(construct_ef(h).sparsity == 62);
    Fn i = fn("builtin:C:5:6");
    ConstructionReport kr = construct_kr(i);
    CHECK(kr.sparsity == 44);
    CHECK(!kr.fell_back);
    CHECK(sparsity_bound(*f.sym) == 57);
}

TEST_CASE("symmetrized complement picks the sparser route") {
    Fn f = fn("builtin:C:5:6");
    ConstructionReport r = construct_sc(f);
    CHECK(r.method == "sc");
    CHECK(r.sparsity == 43);
    CHECK(verify_mod2(r.poly, *f.sym));

    // x1x2 + x2x3: symmetrization gives C^2, complement is x1x3
    Fn g = fn("anf: x1*x2 + x2*x3");
    ConstructionReport rs = construct_sc(g);
    CHECK(rs.sparsity <= 4);
    CHECK(verify_mod2(rs.poly, *g.dense));
}

TEST_CASE("product-arity sweep keeps the expansion sparsity at 2^n - 1") {
    for (int n = 2; n <= 5; ++n) {
        Fn f = parse_fn("builtin:AND:" + std::to_string(n));
        ConstructionReport r = construct_fr(f);
        CHECK(r.sparsity == (1 << n) - 1);
        CHECK(r.granularity == n - 1);
        CHECK(verify_mod2(r.poly, *f.dense));
    }
}

TEST_CASE("symmetric-only construction rejects general functions") {
    Fn f = fn("anf: x1*x2 + x2*x3");
    CHECK_THROWS_AS(construct_csf(f), std::domain_error);
}

TEST_CASE("all power-of-two components verify over a degree/arity sweep") {
    for (int k : {2, 4, 8}) {
        for (int n = k; n <= k + 4; ++n) {
            Fn f = parse_fn("builtin:C:" + std::to_string(k) + ":" + std::to_string(n));
            ConstructionReport r = construct_csf(f);
            CHECK(verify_mod2(r.poly, *f.sym));
        }
    }
}

TEST_CASE("mixed-degree symmetric peel verifies") {
    // weights 0..6 -> arbitrary symmetric value vector
    Fn f = fn("sym:1,0,1,1,0,0,1");
    ConstructionReport r = construct_csf(f);
    CHECK(verify_mod2(r.poly, *f.sym));
    CHECK(Int(r.sparsity) <= sparsity_bound(*f.sym));
}

TEST_CASE("comparison table runs every method in fixed order") {
    Fn f = fn("builtin:C:5:6");
    auto rows = compare_all(f);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].method == "fr");
    CHECK(rows[1].method == "ef");
    CHECK(rows[2].method == "kr");
    CHECK(rows[3].method == "csf");
    CHECK(rows[4].method == "sc");
    for (const auto& row : rows) CHECK(row.ok);
    CHECK(rows[0].sparsity == 43);
    CHECK(rows[1].sparsity == 62);
    CHECK(rows[2].sparsity == 44);
    CHECK(rows[3].sparsity == 43);
    CHECK(rows[4].sparsity == 43);

    Fn g = fn("anf: x1*x2 + x2*x3");
    auto grows = compare_all(g);
    CHECK(!grows[3].ok);  // csf needs symmetry
    CHECK(grows[3].note.find("symmetric") != std::string::npos);
}
