#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nmqc/boolfn.hpp"
#include "nmqc/intmat.hpp"
#include "nmqc/poly.hpp"

namespace nmqc {

struct FeasibilityResult {
    bool feasible = false;
    // Integer correction w with K_E (v + 2w) = 0 when feasible: the class
    // values v + 2w transform to a polynomial supported inside T.
    std::vector<Int> witness;
    int snf_max_diag_bits = 0;
};

// Decides whether f has a representing polynomial whose character classes
// lie inside T, by solving 2 K_E w = -K_E v over the integers (rows of the
// class-sum matrix outside T).
FeasibilityResult decide_symmetric_support(const SymmetricFunction& f,
                                           const std::set<int>& support);

// Class profile (1/2^n) K (v + 2w) of a feasibility witness; throws unless
// the profile lands inside the support and represents f mod 2.
std::vector<Rat> witness_profile(const SymmetricFunction& f, const std::vector<Int>& w,
                                 const std::set<int>& support);

// {0} plus the t lowest and t highest class sizes.
std::set<int> profile_support(int n, int t);

// Smallest t with a feasible profile_support(n, t).
int minimal_profile_t(const SymmetricFunction& f);

struct ScanRow {
    int k = 0, n = 0, t = 0;
    bool feasible = false;
    double elapsed_ms = 0.0;
    int snf_max_diag_bits = 0;
};

// Feasibility of complete symmetric functions over a (k, n, t) grid.
std::vector<ScanRow> conjecture_scan(const std::vector<int>& ks, int n_lo, int n_hi,
                                     const std::vector<int>& ts_rel);
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace nmqc
