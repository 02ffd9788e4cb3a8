#include "nmqc/boolfn.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "nmqc/rational.hpp"

namespace nmqc {

namespace {

bool binom_odd(long w, long k) {
    // Lucas: binom(w,k) is odd iff k's bits are a subset of w's
    if (k < 0 || k > w) return false;
    return (static_cast<unsigned long>(w) & static_cast<unsigned long>(k)) ==
           static_cast<unsigned long>(k);
}

}  // namespace

SymmetricFunction::SymmetricFunction(int n, std::vector<std::uint8_t> values)
    : n_(n), v_(std::move(values)) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("arity out of range");
    if (v_.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("value vector must have n+1 entries");
    for (auto& b : v_) b &= 1;
}

bool SymmetricFunction::value_at_weight(int w) const {
    if (w < 0 || w > n_) throw std::invalid_argument("weight out of range");
    return v_[w] != 0;
}

std::vector<int> SymmetricFunction::anf_class_sizes() const {
    std::vector<std::uint8_t> r = v_;
    std::vector<int> sizes;
    for (int k = 0; k <= n_; ++k) {
        if (r[k] & 1) {
            sizes.push_back(k);
            for (int w = k; w <= n_; ++w) r[w] ^= binom_odd(w, k) ? 1 : 0;
        }
    }
    return sizes;
}

int SymmetricFunction::degree() const {
    auto s = anf_class_sizes();
    return s.empty() ? 0 : s.back();
}

SymmetricFunction SymmetricFunction::csf(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("csf degree out of range");
    std::vector<std::uint8_t> v(n + 1);
    for (int w = 0; w <= n; ++w) v[w] = binom_odd(w, k) ? 1 : 0;
    return SymmetricFunction(n, std::move(v));
}

SymmetricFunction SymmetricFunction::parity(int n) { return csf(1, n); }

SymmetricFunction SymmetricFunction::all_and(int n) {
    std::vector<std::uint8_t> v(n + 1, 0);
    v[n] = 1;
    return SymmetricFunction(n, std::move(v));
}

SymmetricFunction SymmetricFunction::count_multiple(int m, int n) {
    if (m < 1) throw std::invalid_argument("count modulus must be positive");
    std::vector<std::uint8_t> v(n + 1);
    for (int w = 0; w <= n; ++w) v[w] = (w % m == 0) ? 1 : 0;
    return SymmetricFunction(n, std::move(v));
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint64_t> packed_table)
    : n_(n), bits_(std::move(packed_table)) {
    if (n < 0 || n > kMaxDenseVars) throw std::invalid_argument("dense arity cap is 24");
    std::size_t words = (std::size_t{1} << n) <= 64 ? 1 : (std::size_t{1} << n) / 64;
    if (bits_.size() != words) throw std::invalid_argument("bad table size");
    if (n < 6) bits_[0] &= (std::uint64_t{1} << (std::size_t{1} << n)) - 1;
}

BooleanFunction BooleanFunction::zero(int n) {
    std::size_t words = (std::size_t{1} << n) <= 64 ? 1 : (std::size_t{1} << n) / 64;
    return BooleanFunction(n, std::vector<std::uint64_t>(words, 0));
}

bool BooleanFunction::eval(mask_t x) const {
    auto i = static_cast<std::uint64_t>(x);
    if (x >= (mask_t{1} << n_)) throw std::invalid_argument("input out of range");
    return (bits_[i >> 6] >> (i & 63)) & 1;
}

void BooleanFunction::set(mask_t x, bool v) {
    auto i = static_cast<std::uint64_t>(x);
    if (v)
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::string BooleanFunction::table_bits_string() const {
    std::string s;
    s.reserve(std::size_t{1} << n_);
    for (mask_t x = 0; x < (mask_t{1} << n_); ++x) s.push_back(eval(x) ? '1' : '0');
    return s;
}

BooleanFunction truth_from_anf(int n, const std::vector<mask_t>& monomials) {
    BooleanFunction f = BooleanFunction::zero(n);
    mask_t lim = mask_t{1} << n;
    for (mask_t m : monomials) {
        if (m >= lim) throw std::invalid_argument("monomial outside arity");
        for (mask_t x = 0; x < lim; ++x)
            if ((x & m) == m) f.set(x, !f.eval(x));
    }
    return f;
}

BooleanFunction BooleanFunction::from_anf(int n, const std::vector<mask_t>& monomials) {
    return truth_from_anf(n, monomials);
}

BooleanFunction BooleanFunction::from_table_hex(const std::string& hex) {
    std::size_t nbits = hex.size() * 4;
    int n = 0;
    while ((std::size_t{1} << n) < nbits) ++n;
    if ((std::size_t{1} << n) != nbits || n < 2)
        throw std::invalid_argument("hex table length must be a power of two (>= 1 digit)");
    BooleanFunction f = BooleanFunction::zero(n);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char c = hex[i];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in truth table");
        for (int b = 0; b < 4; ++b)
            if ((d >> b) & 1) f.set(mask_t{i * 4 + static_cast<std::size_t>(b)}, true);
    }
    return f;
}

BooleanFunction BooleanFunction::from_symmetric(const SymmetricFunction& s) {
    if (s.n() > kMaxDenseVars) throw std::invalid_argument("dense arity cap is 24");
    BooleanFunction f = BooleanFunction::zero(s.n());
    for (mask_t x = 0; x < (mask_t{1} << s.n()); ++x)
        if (s.eval(x)) f.set(x, true);
    return f;
}

std::vector<mask_t> anf_from_truth(const BooleanFunction& f) {
    int n = f.n();
    std::vector<std::uint8_t> t(std::size_t{1} << n);
    for (mask_t x = 0; x < (mask_t{1} << n); ++x) t[static_cast<std::size_t>(x)] = f.eval(x);
    for (int i = 0; i < n; ++i) {
        std::size_t step = std::size_t{1} << i;
        for (std::size_t x = 0; x < t.size(); ++x)
            if (x & step) t[x] ^= t[x ^ step];
    }
    std::vector<mask_t> out;
    for (std::size_t m = 0; m < t.size(); ++m)
        if (t[m]) out.push_back(mask_t{m});
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<mask_t> BooleanFunction::anf() const { return anf_from_truth(*this); }

int BooleanFunction::degree() const {
    int d = 0;
    for (mask_t m : anf()) d = std::max(d, popcount(m));
    return d;
}

bool BooleanFunction::is_symmetric() const {
    std::vector<int> seen(n_ + 1, -1);
    for (mask_t x = 0; x < (mask_t{1} << n_); ++x) {
        int w = popcount(x);
        int v = eval(x) ? 1 : 0;
        if (seen[w] < 0) seen[w] = v;
        else if (seen[w] != v) return false;
    }
    return true;
}

std::optional<SymmetricFunction> BooleanFunction::to_symmetric() const {
    if (!is_symmetric()) return std::nullopt;
    std::vector<std::uint8_t> v(n_ + 1);
    for (int w = 0; w <= n_; ++w) v[w] = eval((mask_t{1} << w) - 1) ? 1 : 0;
    return SymmetricFunction(n_, std::move(v));
}

std::vector<int> decompose_csf(int k) {
    if (k < 1) throw std::invalid_argument("csf degree must be >= 1");
    std::vector<int> rs;
    for (int r = 0; (1 << r) <= k; ++r)
        if ((k >> r) & 1) rs.push_back(r);
    return rs;
}

std::vector<int> zeta_class_sizes(const std::vector<mask_t>& anf) {
    std::vector<int> sizes;
    for (mask_t m : anf) {
        int s = popcount(m);
        if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) sizes.push_back(s);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

SymmetricFunction zeta_c(const BooleanFunction& f) {
    auto sizes = zeta_class_sizes(f.anf());
    std::vector<std::uint8_t> v(f.n() + 1, 0);
    for (int k : sizes)
        for (int w = 0; w <= f.n(); ++w) v[w] ^= binom_odd(w, k) ? 1 : 0;
    return SymmetricFunction(f.n(), std::move(v));
}

BooleanFunction complement_tilde(const BooleanFunction& f, const SymmetricFunction& sym) {
    if (f.n() != sym.n()) throw std::invalid_argument("arity mismatch");
    BooleanFunction out = f;
    for (mask_t x = 0; x < (mask_t{1} << f.n()); ++x)
        if (sym.eval(x)) out.set(x, !out.eval(x));
    return out;
}

bool Fn::eval(mask_t x) const {
    if (sym) return sym->eval(x);
    if (dense) return dense->eval(x);
    bool v = false;
    for (mask_t m : *anf)
        if ((x & m) == m) v = !v;
    return v;
}

const std::vector<mask_t>& Fn::ensure_anf() {
    if (anf) return *anf;
    if (sym) {
        // expand size classes; refuse unmanageable monomial counts
        Int total = 0;
        auto sizes = sym->anf_class_sizes();
        for (int k : sizes) total += binom(n, k);
        if (total > 5'000'000) throw std::domain_error("ANF too large to materialize");
        std::vector<mask_t> out;
        bool has_const = false;
        for (int k : sizes) {
            if (k == 0) { has_const = true; continue; }
            for_each_subset_of_size(n, k, [&](mask_t m) { out.push_back(m); });
        }
        std::sort(out.begin(), out.end(), canonical_less);
        if (has_const) out.insert(out.begin(), mask_t{0});
        anf = std::move(out);
        return *anf;
    }
    if (dense) {
        anf = anf_from_truth(*dense);
        return *anf;
    }
    throw std::logic_error("empty function spec");
}

const BooleanFunction& Fn::ensure_dense() {
    if (dense) return *dense;
    if (n > BooleanFunction::kMaxDenseVars)
        throw std::domain_error("dense table needs arity <= 24");
    if (sym) dense = BooleanFunction::from_symmetric(*sym);
    else dense = truth_from_anf(n, *anf);
    return *dense;
}

int Fn::degree() const {
    if (sym) return sym->degree();
    if (anf) {
        int d = 0;
        for (mask_t m : *anf) d = std::max(d, popcount(m));
        return d;
    }
    return dense->degree();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::string t = strip(s);
    try {
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    }
}

Fn parse_anf_expr(const std::string& body) {
    std::vector<mask_t> monomials;
    int n = 0;
    for (const std::string& raw : split(body, '+')) {
        std::string term = strip(raw);
        if (term.empty()) {
            if (strip(body).empty()) continue;  // "anf:" (zero function)
            throw std::invalid_argument("empty term in ANF expression");
        }
        if (term == "1") {
            monomials.push_back(0);
            continue;
        }
        mask_t m = 0;
        for (const std::string& fraw : split(term, '*')) {
            std::string f = strip(fraw);
            if (f.size() < 2 || (f[0] != 'x' && f[0] != 'X'))
                throw std::invalid_argument("bad ANF factor: '" + f + "'");
            int idx = parse_int(f.substr(1), "variable index");
            if (idx < 1 || idx > kMaxVars) throw std::invalid_argument("variable index out of range");
            m |= bit(idx - 1);
            n = std::max(n, idx);
        }
        monomials.push_back(m);
    }
    // XOR semantics: a monomial listed twice cancels
    std::sort(monomials.begin(), monomials.end(), canonical_less);
    std::vector<mask_t> anf;
    for (std::size_t i = 0; i < monomials.size();) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
        if ((j - i) % 2) anf.push_back(monomials[i]);
        i = j;
    }
    Fn fn;
    fn.n = n;
    fn.anf = std::move(anf);
    if (n <= BooleanFunction::kMaxDenseVars) fn.dense = truth_from_anf(n, *fn.anf);
    return fn;
}

Fn from_symmetric(SymmetricFunction s) {
    Fn fn;
    fn.n = s.n();
    if (fn.n <= BooleanFunction::kMaxDenseVars) fn.dense = BooleanFunction::from_symmetric(s);
    fn.sym = std::move(s);
    return fn;
}

Fn parse_builtin(const std::string& body) {
    auto parts = split(body, ':');
    if (parts.empty()) throw std::invalid_argument("empty builtin spec");
    const std::string name = strip(parts[0]);
    auto arg = [&](std::size_t i, const char* what) {
        if (i >= parts.size()) throw std::invalid_argument(std::string("missing ") + what);
        return parse_int(parts[i], what);
    };
    if (name == "AND") return from_symmetric(SymmetricFunction::all_and(arg(1, "arity")));
    if (name == "PARITY") return from_symmetric(SymmetricFunction::parity(arg(1, "arity")));
    if (name == "C") return from_symmetric(SymmetricFunction::csf(arg(1, "degree"), arg(2, "arity")));
    if (name == "COUNT")
        return from_symmetric(SymmetricFunction::count_multiple(arg(1, "modulus"), arg(2, "arity")));
    if (name == "AC") {
        int k = arg(1, "degree"), n = arg(2, "arity"), t = arg(3, "missing-term count");
        if (k < 0 || k > n) throw std::invalid_argument("AC degree out of range");
        Int cnt = binom(n, k);
        if (t < 0 || cnt < t) throw std::invalid_argument("AC removes more terms than exist");
        if (cnt > 5'000'000) throw std::invalid_argument("AC arity too large to materialize");
        std::vector<mask_t> anf;
        int skipped = 0;
        for_each_subset_of_size(n, k, [&](mask_t m) {
            if (skipped < t) ++skipped;
            else anf.push_back(m);
        });
        Fn fn;
        fn.n = n;
        fn.anf = std::move(anf);
        if (n <= BooleanFunction::kMaxDenseVars) fn.dense = truth_from_anf(n, *fn.anf);
        return fn;
    }
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace

Fn parse_fn(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("function spec needs a 'kind:' prefix");
    std::string kind = strip(spec.substr(0, colon));
    std::string body = spec.substr(colon + 1);
    if (kind == "anf") return parse_anf_expr(body);
    if (kind == "tt") {
        Fn fn;
        fn.dense = BooleanFunction::from_table_hex(strip(body));
        fn.n = fn.dense->n();
        return fn;
    }
    if (kind == "sym") {
        std::vector<std::uint8_t> v;
        for (const std::string& b : split(body, ','))
            v.push_back(static_cast<std::uint8_t>(parse_int(b, "symmetric value bit") & 1));
        if (v.empty()) throw std::invalid_argument("empty symmetric value vector");
        int n = static_cast<int>(v.size()) - 1;
        return from_symmetric(SymmetricFunction(n, std::move(v)));
    }
    if (kind == "builtin") return parse_builtin(body);
    throw std::invalid_argument("unknown function spec kind '" + kind + "'");
}

}  // namespace nmqc
