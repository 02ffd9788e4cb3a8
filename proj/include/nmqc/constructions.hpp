#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmqc/boolfn.hpp"
#include "nmqc/poly.hpp"

namespace nmqc {

struct ConstructionReport {
    std::string method;   // fr | ef | kr | csf | sc
    int n = 0;
    int sparsity = 0;
    int granularity = 0;
    double elapsed_ms = 0.0;
    MultilinearPoly poly;
    bool fell_back = false;  // kr only: greedy signs lost to all-positive
};

// Fourier representative: p = (1 - sum_S c_S chi_S)/2 from the full sign
// expansion. Dense tables only (n <= 24); symmetric inputs go through the
// per-class transform instead of the butterfly.
ConstructionReport construct_fr(Fn& f);

// Expansion-first: sum over ANF monomials of the product representative
// prod_{i in T}(1 - chi_i)/2, all signs positive.
ConstructionReport construct_ef(Fn& f);

// Like ef but each monomial enters with the sign that cancels the most
// already-accumulated coefficients exactly (ties keep +). Falls back to the
// all-positive sum when greedy ends up denser.
ConstructionReport construct_kr(Fn& f);

// Symmetric-only: peel the complete symmetric components of f, represent
// each as a product of power-of-two representatives, and add them up.
ConstructionReport construct_csf(Fn& f);

// Symmetrized complement: the sparser of kr(f) and kr(f xor z) + csf(z)
// where z is the symmetrization of f's monomial size classes; ties keep the
// direct route.
ConstructionReport construct_sc(Fn& f);

// Upper bound on csf sparsity: sum over peeled sizes k of
// prod_{r in bits(k)}(s_r + 1) - 1, with s_r the sparsity of the power-of-two
// representative of size 2^r.
Int sparsity_bound(const SymmetricFunction& f);

struct CompareRow {
    std::string method;
    bool ok = false;
    std::string note;  // reason when not ok
    int sparsity = 0;
    int granularity = 0;
    double elapsed_ms = 0.0;
};

// Runs every method that applies, in fixed order fr, ef, kr, csf, sc, each
// under its own time budget.
std::vector<CompareRow> compare_all(Fn& f, double budget_ms = 30000.0);

}  // namespace nmqc
