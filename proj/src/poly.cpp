#include "nmqc/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nmqc/transforms.hpp"

namespace nmqc {

using ordered_json = nlohmann::ordered_json;

MultilinearPoly::MultilinearPoly(int n) : n_(n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("arity out of range");
}

Rat MultilinearPoly::coeff(mask_t s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultilinearPoly::set_coeff(mask_t s, const Rat& c) {
    if ((s & ~full_mask(n_)) != 0) throw std::invalid_argument("term outside arity");
    if (c == 0)
        terms_.erase(s);
    else
        terms_[s] = c;
}

void MultilinearPoly::add_term(mask_t s, const Rat& c) { set_coeff(s, coeff(s) + c); }

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("arity mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
    MultilinearPoly r = *this;
    r += o;
    return r;
}

MultilinearPoly MultilinearPoly::operator-() const { return scaled(Rat(-1)); }

MultilinearPoly MultilinearPoly::scaled(const Rat& c) const {
    MultilinearPoly r(n_);
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) r.terms_[s] = c * v;
    return r;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("arity mismatch");
    MultilinearPoly r(n_);
    for (const auto& [s, c] : terms_)
        for (const auto& [t, d] : o.terms_) r.add_term(s ^ t, c * d);
    return r;
}

Rat MultilinearPoly::evaluate(mask_t x) const {
    Rat v = 0;
    for (const auto& [s, c] : terms_)
        if (popcount(s & x) & 1)
            v -= c;
        else
            v += c;
    return v;
}

int MultilinearPoly::sparsity() const {
    return static_cast<int>(terms_.size()) - (terms_.count(0) ? 1 : 0);
}

int MultilinearPoly::granularity() const {
    int g = 0;
    for (const auto& [s, c] : terms_) g = std::max(g, granularity_of(2 * c));
    return g;
}

int granularity_of(const Rat& c) { return nmqc::granularity(c); }

bool MultilinearPoly::is_symmetric() const {
    // every term must equal its class representative, and each touched class
    // must be fully populated
    std::vector<long> count(n_ + 1, 0);
    for (const auto& [s, c] : terms_) {
        if (coeff(full_mask(popcount(s))) != c) return false;
        count[popcount(s)]++;
    }
    for (int k = 0; k <= n_; ++k)
        if (count[k] != 0 && Int(count[k]) != binom_i(n_, k)) return false;
    return true;
}

std::vector<Rat> MultilinearPoly::to_profile() const {
    if (!is_symmetric()) throw std::domain_error("polynomial is not symmetric");
    std::vector<Rat> p(n_ + 1);
    for (const auto& [s, c] : terms_) p[popcount(s)] = c;
    return p;
}

MultilinearPoly MultilinearPoly::from_profile(int n, const std::vector<Rat>& profile) {
    if (static_cast<int>(profile.size()) != n + 1)
        throw std::invalid_argument("profile must have n+1 entries");
    MultilinearPoly p(n);
    for (int k = 0; k <= n; ++k) {
        if (profile[k] == 0) continue;
        for_each_subset_of_size(n, k, [&](mask_t m) { p.terms_[m] = profile[k]; });
    }
    return p;
}

std::string MultilinearPoly::to_json() const {
    ordered_json j;
    j["n"] = n_;
    j["terms"] = ordered_json::array();
    for (const auto& [s, c] : terms_) {
        ordered_json term;
        term["S"] = mask_indices(s);
        term["c"] = rat_str(c);
        j["terms"].push_back(std::move(term));
    }
    return j.dump();
}

MultilinearPoly MultilinearPoly::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    MultilinearPoly p(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        auto idxs = term.at("S").get<std::vector<int>>();
        p.add_term(mask_from_indices(idxs, p.n()), rat_from_str(term.at("c").get<std::string>()));
    }
    return p;
}

namespace {

bool value_matches(const Rat& v, bool fx) {
    if (!is_integer(v)) return false;
    return mod2(v) == fx;
}

}  // namespace

bool verify_mod2(const MultilinearPoly& p, const BooleanFunction& f) {
    if (p.n() != f.n()) throw std::invalid_argument("arity mismatch");
    for (mask_t x = 0; x < (mask_t{1} << f.n()); ++x)
        if (!value_matches(p.evaluate(x), f.eval(x))) return false;
    return true;
}

bool verify_mod2(const MultilinearPoly& p, const SymmetricFunction& f) {
    if (p.n() != f.n()) throw std::invalid_argument("arity mismatch");
    auto profile = p.to_profile();
    for (int w = 0; w <= f.n(); ++w) {
        Rat v = 0;
        for (int i = 0; i <= f.n(); ++i)
            if (profile[i] != 0) v += profile[i] * Rat(krawtchouk_entry(f.n(), w, i));
        if (!value_matches(v, f.value_at_weight(w))) return false;
    }
    return true;
}

bool verify_mod2_sampled(const MultilinearPoly& p, const Fn& f, int samples,
                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        mask_t x = 0;
        for (int b = 0; b < f.n; b += 64)
            x |= mask_t{rng()} << b;
        x &= full_mask(f.n);
        if (!value_matches(p.evaluate(x), f.eval(x))) return false;
    }
    return true;
}

MultilinearPoly csf_power2_poly(int k, int n) {
    if (k > n) throw std::invalid_argument("degree exceeds arity");
    if (k == 1) {
        MultilinearPoly p(n);
        p.set_coeff(0, make_rat(1, 2));
        p.set_coeff(full_mask(n), make_rat(-1, 2));
        return p;
    }
    if (k < 1 || (k & (k - 1)) != 0 || k > 64)
        throw std::invalid_argument("degree must be a power of two up to 64");
    // binomial closed form on size classes: the xor-basis coefficient
    // (-1)^{j+1} binom(n - k/2 - j, k/2 - j) / 2^{k-1} sits on size-j subsets
    // and its negation on size-(n - j + 1), j = 1 .. k/2; each a * xor_S
    // becomes a/2 on the constant and -a/2 on chi_S
    int h = k / 2;
    std::vector<Rat> profile(n + 1);
    Rat scale(1, 1);
    scale /= Rat(Int(1) << k);  // (1 / 2^{k-1}) * (1/2) from the basis change
    for (int j = 1; j <= h; ++j) {
        Rat a = Rat(binom_i(n - h - j, h - j)) * scale;
        if (j % 2 == 0) a = -a;
        profile[0] += a * Rat(binom_i(n, j) - binom_i(n, j - 1));
        profile[j] -= a;
        profile[n - j + 1] += a;
    }
    return MultilinearPoly::from_profile(n, profile);
}

}  // namespace nmqc
