#include "nmqc/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "nmqc/transforms.hpp"

namespace nmqc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr long kMaxMaterializedTerms = 4'000'000;

// prod_{i in T} (1 - chi_i)/2: coefficient (-1)^{|S|} / 2^{|T|} on each
// subset S of T. The empty monomial is the constant 1.
MultilinearPoly monomial_poly(int n, mask_t t) {
    MultilinearPoly p(n);
    if (t == 0) {
        p.set_coeff(0, Rat(1));
        return p;
    }
    int d = popcount(t);
    if (d > 24) throw std::domain_error("monomial expansion too wide");
    Rat base = Rat(1) / Rat(Int(1) << d);
    mask_t s = t;
    for (;;) {
        p.set_coeff(s, (popcount(s) & 1) ? -base : base);
        if (s == 0) break;
        s = (s - 1) & t;
    }
    return p;
}

ConstructionReport finish(const char* method, MultilinearPoly poly, Clock::time_point t0,
                          bool fell_back = false) {
    ConstructionReport r;
    r.method = method;
    r.n = poly.n();
    r.sparsity = poly.sparsity();
    r.granularity = poly.granularity();
    r.elapsed_ms = ms_since(t0);
    r.poly = std::move(poly);
    r.fell_back = fell_back;
    return r;
}

long anf_expansion_cost(const std::vector<mask_t>& anf) {
    long cost = 0;
    for (mask_t t : anf) {
        int d = popcount(t);
        if (d > 24) return -1;
        cost += long{1} << d;
        if (cost > kMaxMaterializedTerms) return -1;
    }
    return cost;
}

MultilinearPoly sum_of_monomials(int n, const std::vector<mask_t>& anf) {
    if (anf_expansion_cost(anf) < 0) throw std::domain_error("expansion too large");
    MultilinearPoly acc(n);
    for (mask_t t : anf) acc += monomial_poly(n, t);
    return acc;
}

// size descending, then lowest differing variable first
std::vector<mask_t> kr_order(std::vector<mask_t> anf) {
    std::sort(anf.begin(), anf.end(), [](mask_t a, mask_t b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return lex_less(a, b);
    });
    return anf;
}

MultilinearPoly symmetric_fr(const SymmetricFunction& s) {
    std::vector<Rat> v(s.n() + 1);
    for (int w = 0; w <= s.n(); ++w) v[w] = s.value_at_weight(w) ? 1 : 0;
    auto profile = krawtchouk_coefficients(s.n(), v);
    Int terms = 0;
    for (int j = 0; j <= s.n(); ++j)
        if (profile[j] != 0) terms += binom_i(s.n(), j);
    if (terms > kMaxMaterializedTerms) throw std::domain_error("profile too dense to materialize");
    return MultilinearPoly::from_profile(s.n(), profile);
}

}  // namespace

ConstructionReport construct_fr(Fn& f) {
    auto t0 = Clock::now();
    if (f.sym) return finish("fr", symmetric_fr(*f.sym), t0);
    const BooleanFunction& dense = f.ensure_dense();
    MultilinearPoly w = walsh_hadamard(dense);
    MultilinearPoly p = (-w).scaled(make_rat(1, 2));
    p.add_term(0, make_rat(1, 2));
    return finish("fr", std::move(p), t0);
}

ConstructionReport construct_ef(Fn& f) {
    auto t0 = Clock::now();
    return finish("ef", sum_of_monomials(f.n, f.ensure_anf()), t0);
}

ConstructionReport construct_kr(Fn& f) {
    auto t0 = Clock::now();
    const auto& anf = f.ensure_anf();
    if (anf_expansion_cost(anf) < 0) throw std::domain_error("expansion too large");

    MultilinearPoly acc(f.n);
    for (mask_t t : kr_order(anf)) {
        MultilinearPoly p = monomial_poly(f.n, t);
        int cancel_plus = 0, cancel_minus = 0;
        for (const auto& [s, c] : p.terms()) {
            Rat a = acc.coeff(s);
            if (a == 0) continue;
            if (a == -c) ++cancel_plus;
            if (a == c) ++cancel_minus;
        }
        acc += cancel_minus > cancel_plus ? -p : p;
    }

    MultilinearPoly all_pos = sum_of_monomials(f.n, anf);
    if (acc.sparsity() > all_pos.sparsity())
        return finish("kr", std::move(all_pos), t0, true);
    return finish("kr", std::move(acc), t0);
}

ConstructionReport construct_csf(Fn& f) {
    auto t0 = Clock::now();
    if (!f.sym) throw std::domain_error("construction needs a symmetric function");
    const SymmetricFunction& s = *f.sym;
    MultilinearPoly acc(s.n());
    for (int k : s.anf_class_sizes()) {
        if (k == 0) {
            acc.add_term(0, Rat(1));
            continue;
        }
        MultilinearPoly prod(s.n());
        bool first = true;
        for (int r : decompose_csf(k)) {
            MultilinearPoly factor = csf_power2_poly(r == 0 ? 1 : (1 << r), s.n());
            prod = first ? std::move(factor) : prod * factor;
            first = false;
        }
        acc += prod;
    }
    return finish("csf", std::move(acc), t0);
}

ConstructionReport construct_sc(Fn& f) {
    auto t0 = Clock::now();
    ConstructionReport direct = construct_kr(f);

    const auto& anf = f.ensure_anf();
    auto sizes = zeta_class_sizes(anf);
    std::vector<std::uint8_t> zv(f.n + 1, 0);
    for (int k : sizes)
        for (int w = k; w <= f.n; ++w)
            zv[w] ^= ((static_cast<unsigned>(w) & static_cast<unsigned>(k)) ==
                      static_cast<unsigned>(k))
                         ? 1
                         : 0;
    SymmetricFunction z(f.n, std::move(zv));

    // f xor z in monomial space: z holds every full size class it touches
    Int class_terms = 0;
    for (int k : sizes) class_terms += binom_i(f.n, k);
    if (class_terms > kMaxMaterializedTerms)
        throw std::domain_error("symmetrization too dense to materialize");
    std::vector<mask_t> tilde = anf;
    for (int k : sizes) {
        for_each_subset_of_size(f.n, k, [&](mask_t m) { tilde.push_back(m); });
    }
    std::sort(tilde.begin(), tilde.end(), canonical_less);
    std::vector<mask_t> reduced;
    for (std::size_t i = 0; i < tilde.size();) {
        std::size_t j = i;
        while (j < tilde.size() && tilde[j] == tilde[i]) ++j;
        if ((j - i) % 2) reduced.push_back(tilde[i]);
        i = j;
    }

    Fn ft;
    ft.n = f.n;
    ft.anf = std::move(reduced);
    Fn fz;
    fz.n = f.n;
    fz.sym = z;

    ConstructionReport via = construct_kr(ft);
    ConstructionReport zrep = construct_csf(fz);
    MultilinearPoly combined = via.poly + zrep.poly;

    if (combined.sparsity() < direct.sparsity) {
        ConstructionReport r = finish("sc", std::move(combined), t0);
        return r;
    }
    direct.method = "sc";
    direct.elapsed_ms = ms_since(t0);
    return direct;
}

Int sparsity_bound(const SymmetricFunction& f) {
    Int total = 0;
    for (int k : f.anf_class_sizes()) {
        if (k == 0) continue;
        Int prod = 1;
        for (int r : decompose_csf(k)) {
            Int s;
            if (r == 0) {
                s = 1;
            } else {
                s = 0;
                for (int j = 1; j <= (1 << (r - 1)); ++j) s += binom_i(f.n() + 1, j);
            }
            prod *= s + 1;
        }
        total += prod - 1;
    }
    return total;
}

std::vector<CompareRow> compare_all(Fn& f, double budget_ms) {
    std::vector<CompareRow> rows;
    auto attempt = [&](const char* method, auto&& ctor) {
        CompareRow row;
        row.method = method;
        auto t0 = Clock::now();
        try {
            ConstructionReport r = ctor();
            row.ok = true;
            row.sparsity = r.sparsity;
            row.granularity = r.granularity;
            row.elapsed_ms = r.elapsed_ms;
            if (r.elapsed_ms > budget_ms) {
                row.ok = false;
                row.note = "time budget exceeded";
            }
        } catch (const std::exception& e) {
            row.ok = false;
            row.note = e.what();
            row.elapsed_ms = ms_since(t0);
        }
        rows.push_back(std::move(row));
    };
    attempt("fr", [&] { return construct_fr(f); });
    attempt("ef", [&] { return construct_ef(f); });
    attempt("kr", [&] { return construct_kr(f); });
    attempt("csf", [&] { return construct_csf(f); });
    attempt("sc", [&] { return construct_sc(f); });
    return rows;
}

}  // namespace nmqc
