#include "nmqc/feasibility.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "nmqc/transforms.hpp"

namespace nmqc {

FeasibilityResult decide_symmetric_support(const SymmetricFunction& f,
                                           const std::set<int>& support) {
    const int n = f.n();
    std::vector<int> erows;
    for (int i = 0; i <= n; ++i)
        if (!support.count(i)) erows.push_back(i);

    FeasibilityResult res;
    res.witness.assign(n + 1, 0);
    if (erows.empty()) {
        res.feasible = true;
        return res;
    }

    const int m = static_cast<int>(erows.size());
    IntegerMatrix a(m, n + 1);
    std::vector<Int> b(m);
    for (int r = 0; r < m; ++r) {
        Int dot = 0;
        for (int j = 0; j <= n; ++j) {
            Int e = krawtchouk_entry(n, erows[r], j);
            a(r, j) = 2 * e;
            if (f.value_at_weight(j)) dot += e;
        }
        b[r] = -dot;
    }

    SnfDecomposition snf = smith_normal_form(a);
    std::vector<Int> diag = snf.diag();
    for (const Int& d : diag)
        if (d != 0)
            res.snf_max_diag_bits = std::max(
                res.snf_max_diag_bits, static_cast<int>(mpz_sizeinbase(d.get_mpz_t(), 2)));

    std::vector<Int> ub = snf.u * b;
    std::vector<Int> y(n + 1, 0);
    for (int i = 0; i < m; ++i) {
        if (diag[i] == 0) {
            if (ub[i] != 0) return res;
        } else {
            if (ub[i] % diag[i] != 0) return res;
            y[i] = ub[i] / diag[i];
        }
    }

    res.witness = snf.v * y;
    for (int r = 0; r < m; ++r) {
        Int acc = 0;
        for (int j = 0; j <= n; ++j)
            acc += krawtchouk_entry(n, erows[r], j) *
                   (Int(f.value_at_weight(j) ? 1 : 0) + 2 * res.witness[j]);
        if (acc != 0) throw std::logic_error("witness fails its defining equations");
    }
    res.feasible = true;
    return res;
}

std::vector<Rat> witness_profile(const SymmetricFunction& f, const std::vector<Int>& w,
                                 const std::set<int>& support) {
    const int n = f.n();
    if (static_cast<int>(w.size()) != n + 1)
        throw std::invalid_argument("witness must have n+1 entries");
    std::vector<Rat> values(n + 1);
    for (int j = 0; j <= n; ++j) values[j] = Rat(Int(f.value_at_weight(j) ? 1 : 0) + 2 * w[j]);
    std::vector<Rat> profile = krawtchouk_coefficients(n, values);
    for (int i = 0; i <= n; ++i)
        if (profile[i] != 0 && !support.count(i))
            throw std::domain_error("witness profile leaks outside its support");
    MultilinearPoly p = MultilinearPoly::from_profile(n, profile);
    if (!verify_mod2(p, f)) throw std::domain_error("witness profile does not represent f");
    return profile;
}

std::set<int> profile_support(int n, int t) {
    std::set<int> support = {0};
    for (int i = 1; i <= t && i <= n; ++i) support.insert(i);
    for (int i = std::max(0, n - t); i <= n; ++i) support.insert(i);
    return support;
}

int minimal_profile_t(const SymmetricFunction& f) {
    for (int t = 0;; ++t) {
        if (decide_symmetric_support(f, profile_support(f.n(), t)).feasible) return t;
        if (2 * t >= f.n()) throw std::logic_error("full support must be feasible");
    }
}

std::vector<ScanRow> conjecture_scan(const std::vector<int>& ks, int n_lo, int n_hi,
                                     const std::vector<int>& ts_rel) {
    std::vector<ScanRow> rows;
    for (int k : ks) {
        for (int n = std::max(n_lo, k); n <= n_hi; ++n) {
            SymmetricFunction f = SymmetricFunction::csf(k, n);
            for (int rel : ts_rel) {
                int t = k / 2 + rel;
                if (t < 0) continue;
                auto start = std::chrono::steady_clock::now();
                FeasibilityResult r = decide_symmetric_support(f, profile_support(n, t));
                auto stop = std::chrono::steady_clock::now();
                ScanRow row;
                row.k = k;
                row.n = n;
                row.t = t;
                row.feasible = r.feasible;
                row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
                row.snf_max_diag_bits = r.snf_max_diag_bits;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "k,n,t,feasible,elapsed_ms,snf_max_diag_bits\n";
    char line[128];
    for (const ScanRow& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%.3f,%d\n", r.k, r.n, r.t,
                      r.feasible ? 1 : 0, r.elapsed_ms, r.snf_max_diag_bits);
        out += line;
    }
    return out;
}

}  // namespace nmqc
