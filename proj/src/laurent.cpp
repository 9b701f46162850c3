#include "qpcluster/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpc {

long long expo_degree(const Expo& e) {
    long long d = 0;
    for (long long x : e) d += x;
    return d;
}

bool TermOrder::operator()(const Expo& a, const Expo& b) const {
    long long da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Expo(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Expo& e, const Int& c) {
    LaurentPoly p(int(e.size()));
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && expo_degree(e) == 0 && *std::max_element(e.begin(), e.end()) == 0;
}

std::pair<Expo, Int> LaurentPoly::single_term() const {
    const auto& [e, c] = *terms_.begin();
    return {e, c};
}

void LaurentPoly::add_term(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly r(nvars_);
    if (terms_.empty() || rhs.terms_.empty()) return r;
    Expo e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
    if (nvars_ != rhs.nvars_) return nvars_ < rhs.nvars_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return TermOrder()(a.first, b.first);
            return a.second < b.second;
        });
}

LaurentPoly LaurentPoly::mul_monomial(const Expo& e, const Int& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    Expo f(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
        r.terms_.emplace(f, ca * c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly base = *this;
    LaurentPoly r = constant(nvars_, 1);
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

const std::pair<const Expo, Int>& LaurentPoly::leading() const {
    return *terms_.rbegin();
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Expo LaurentPoly::min_exponents() const {
    Expo m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::div_content(const Int& d) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / d);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly(nvars_);
    if (d.is_monomial()) {
        auto [ed, cd] = d.single_term();
        LaurentPoly q(nvars_);
        Expo e(nvars_);
        for (const auto& [ea, ca] : terms_) {
            if (!mpz_divisible_p(ca.get_mpz_t(), cd.get_mpz_t())) return std::nullopt;
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] - ed[i];
            q.terms_.emplace(e, ca / cd);
        }
        return q;
    }
    // Long division by leading terms.  In the Laurent ring a non-divisor can
    // produce an unbounded series, so bail out once the remainder's leading
    // term falls below where any exact quotient could still reach.
    const Expo& trail_a = terms_.begin()->first;
    const Expo& lead_d = d.leading().first;
    const Int& lc_d = d.leading().second;
    LaurentPoly q(nvars_), r = *this;
    TermOrder lt;
    long long guard = 200000;
    Expo qe(nvars_);
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        if (lt(er, trail_a)) return std::nullopt;
        if (!mpz_divisible_p(cr.get_mpz_t(), lc_d.get_mpz_t())) return std::nullopt;
        for (int i = 0; i < nvars_; ++i) qe[i] = er[i] - lead_d[i];
        Int qc = cr / lc_d;
        q.add_term(qe, qc);
        r = r - d.mul_monomial(qe, qc);
        if (--guard == 0) return std::nullopt;
    }
    return q;
}

namespace {

Rat rat_pow(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e > 0) return Rat(0);
        fail("PoleAtPoint", "negative power of zero in evaluation");
    }
    Rat b = e > 0 ? x : Rat(1) / x;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r(1);
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

} // namespace

Rat LaurentPoly::eval_q(const QVec& x) const {
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= rat_pow(x[i], e[i]);
        s += t;
    }
    return s;
}

double LaurentPoly::eval_d(const std::vector<double>& x) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= std::pow(x[i], double(e[i]));
        s += t;
    }
    return s;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return std::uint64_t((unsigned __int128)(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    return mod_pow(a, p - 2, p);
}

std::uint64_t mod_of(const Int& c, std::uint64_t p) {
    Int m;
    Int pz;
    mpz_set_ui(pz.get_mpz_t(), p);
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    return mpz_get_ui(m.get_mpz_t());
}

std::optional<std::uint64_t> LaurentPoly::eval_mod(const std::vector<std::uint64_t>& x,
                                                   std::uint64_t p) const {
    std::uint64_t s = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = mod_of(c, p);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            std::uint64_t base = x[i] % p;
            if (base == 0) {
                if (e[i] < 0) return std::nullopt;
                t = 0;
                continue;
            }
            std::uint64_t pw = mod_pow(base, std::uint64_t(e[i] > 0 ? e[i] : -e[i]), p);
            if (e[i] < 0) pw = mod_inv(pw, p);
            t = mod_mul(t, pw, p);
        }
        s = (s + t) % p;
    }
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << it->second.get_str() << " * z^(";
        for (int i = 0; i < nvars_; ++i) {
            if (i) out << ",";
            out << it->first[i];
        }
        out << ")";
    }
    return out.str();
}

// Multivariate gcd via a primitive pseudo-remainder sequence.  The result is
// normalized: trivial monomial content, positive integer content, positive
// leading coefficient.
//
// Pseudo-remainder sequences can swell badly in several variables, so the
// recursion runs on a work budget; once it is spent the caller falls back to
// the integer content, which is still a valid common divisor.

namespace {

struct GcdBudget {};

thread_local long long gcd_work = 0;

void charge(std::size_t amount) {
    gcd_work -= static_cast<long long>(amount);
    if (gcd_work < 0) throw GcdBudget{};
}

// polynomial (non-negative exponents) view of one variable
using UniView = std::map<long long, LaurentPoly>;

UniView split_var(const LaurentPoly& p, int v) {
    UniView u;
    for (const auto& [e, c] : p.terms()) {
        Expo rest = e;
        long long d = rest[v];
        rest[v] = 0;
        auto [it, inserted] = u.try_emplace(d, LaurentPoly(p.nvars()));
        it->second.add_term(rest, c);
    }
    return u;
}

LaurentPoly join_var(const UniView& u, int v, int nvars) {
    LaurentPoly p(nvars);
    for (const auto& [d, coeff] : u) {
        Expo shift(nvars, 0);
        shift[v] = d;
        p = p + coeff.mul_monomial(shift, Int(1));
    }
    return p;
}

long long deg_var(const LaurentPoly& p, int v) {
    bool first = true;
    long long d = 0;
    for (const auto& [e, c] : p.terms()) {
        if (first || e[v] > d) d = e[v];
        first = false;
    }
    return d;
}

bool var_occurs(const LaurentPoly& p, int v) {
    for (const auto& [e, c] : p.terms())
        if (e[v] != 0) return true;
    return false;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

// gcd of all univariate-view coefficients
LaurentPoly view_content(const UniView& u, int nvars) {
    LaurentPoly g(nvars);
    for (const auto& [d, coeff] : u) {
        g = gcd_rec(g, coeff);
        if (g.is_one()) break;
    }
    return g;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    charge(a.term_count() + b.term_count());
    int nvars = a.nvars();
    int v = -1;
    for (int i = 0; i < nvars; ++i) {
        if (var_occurs(a, i) || var_occurs(b, i)) { v = i; break; }
    }
    if (v < 0) {
        // both are integer constants
        return LaurentPoly::constant(nvars, gcd(a.leading().second, b.leading().second));
    }
    UniView ua = split_var(a, v), ub = split_var(b, v);
    LaurentPoly ca = view_content(ua, nvars), cb = view_content(ub, nvars);
    LaurentPoly cont = gcd_rec(ca, cb);
    LaurentPoly f = *a.exact_div(ca);
    LaurentPoly g = *b.exact_div(cb);
    if (deg_var(f, v) < deg_var(g, v)) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g in the variable v
        UniView ug = split_var(g, v);
        long long n = ug.rbegin()->first;
        LaurentPoly lc_g = ug.rbegin()->second;
        LaurentPoly r = f;
        while (!r.is_zero() && deg_var(r, v) >= n) {
            charge(r.term_count());
            UniView ur = split_var(r, v);
            long long dr = ur.rbegin()->first;
            LaurentPoly lc_r = ur.rbegin()->second;
            Expo shift(nvars, 0);
            shift[v] = dr - n;
            r = r * lc_g - g * lc_r.mul_monomial(shift, Int(1));
        }
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            UniView ur = split_var(r, v);
            LaurentPoly cr = view_content(ur, nvars);
            g = *r.exact_div(cr);
        }
    }
    UniView uf = split_var(f, v);
    LaurentPoly cf = view_content(uf, nvars);
    return cont * *f.exact_div(cf);
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto normalize = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        Expo m = p.min_exponents();
        for (auto& x : m) x = -x;
        p = p.mul_monomial(m, Int(1));
        Int c = p.content();
        if (p.leading().second < 0) c = -c;
        return p.div_content(c);
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    Int c = gcd(a.content(), b.content());
    LaurentPoly na = normalize(a), nb = normalize(b);
    LaurentPoly g = LaurentPoly::constant(a.nvars(), Int(1));
    if (!na.is_one() && !nb.is_one()) {
        gcd_work = 2'000'000;
        try {
            g = normalize(gcd_rec(na, nb));
        } catch (const GcdBudget&) {
            // keep the trivial divisor
        }
    }
    return c == 1 ? g : g.mul_monomial(Expo(g.nvars(), 0), c);
}

} // namespace qpc
