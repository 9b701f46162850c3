#include "qpcluster/ratfun.hpp"

#include <sstream>

namespace qpc {

Rat rat_pow(const Rat& b, long long e) {
    Rat base = e < 0 ? Rat(1) / b : b;
    long long k = e < 0 ? -e : e;
    Rat r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("ZeroDenominator", "rational function with zero denominator");
    normalize();
}

RationalFn RationalFn::from_poly(const LaurentPoly& p) {
    return RationalFn(p, LaurentPoly::constant(p.nvars(), Int(1)));
}

RationalFn RationalFn::monomial(const Expo& e, const Int& c) {
    return from_poly(LaurentPoly::monomial(e, c));
}

RationalFn RationalFn::one(int nvars) {
    return from_poly(LaurentPoly::constant(nvars, Int(1)));
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.nvars(), Int(1));
        return;
    }
    Expo m = den_.min_exponents();
    bool shift = false;
    for (long long x : m)
        if (x != 0) shift = true;
    if (shift) {
        Expo neg(m.size());
        for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
        num_ = num_.mul_monomial(neg, Int(1));
        den_ = den_.mul_monomial(neg, Int(1));
    }
    Int g = gcd(num_.content(), den_.content());
    if (den_.leading().second < 0) g = -g;
    if (g != 1) {
        num_ = num_.div_content(g);
        den_ = den_.div_content(g);
    }
}

std::optional<Expo> RationalFn::as_unit_monomial() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    auto [en, cn] = num_.single_term();
    auto [ed, cd] = den_.single_term();
    if (cn != cd) return std::nullopt;
    Expo e(en.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = en[i] - ed[i];
    return e;
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
    return RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator-(const RationalFn& rhs) const {
    return RationalFn(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
    return RationalFn(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn RationalFn::operator/(const RationalFn& rhs) const {
    if (rhs.is_zero()) fail("ZeroDenominator", "division by the zero function");
    return RationalFn(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) fail("ZeroDenominator", "inverse of the zero function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(long long e) const {
    if (e == 0) return one(nvars());
    const RationalFn& base = *this;
    RationalFn b = e > 0 ? base : base.inverse();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    return RationalFn(b.num_.pow(k), b.den_.pow(k));
}

void RationalFn::simplify(const SimplifyOptions& opts) {
    if (num_.term_count() <= opts.gcd_threshold && den_.term_count() <= opts.gcd_threshold)
        return;
    LaurentPoly g = laurent_gcd(num_, den_);
    if (g.is_zero() || g.is_one()) return;
    auto qn = num_.exact_div(g);
    auto qd = den_.exact_div(g);
    if (!qn || !qd) return;  // keep the unreduced form rather than trust a bad gcd
    num_ = *qn;
    den_ = *qd;
    normalize();
}

Rat RationalFn::eval_q(const QVec& x) const {
    Rat d = den_.eval_q(x);
    if (d == 0) fail("PoleAtPoint", "denominator vanishes at evaluation point");
    return num_.eval_q(x) / d;
}

double RationalFn::eval_d(const std::vector<double>& x) const {
    return num_.eval_d(x) / den_.eval_d(x);
}

std::optional<std::uint64_t> RationalFn::eval_mod(const std::vector<std::uint64_t>& x,
                                                  std::uint64_t p) const {
    auto n = num_.eval_mod(x, p);
    auto d = den_.eval_mod(x, p);
    if (!n || !d || *d == 0) return std::nullopt;
    return mod_mul(*n, mod_inv(*d, p), p);
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

bool ratfn_equal(const RationalFn& a, const RationalFn& b) {
    return a.num() * b.den() == b.num() * a.den();
}

// FactoredFn

FactoredFn FactoredFn::monomial(const Expo& e, const Rat& c) {
    FactoredFn f(int(e.size()));
    f.mul_monomial(e, c);
    return f;
}

void FactoredFn::mul_monomial(const Expo& e, const Rat& c) {
    if (c == 0) fail("ZeroDenominator", "factored form cannot represent zero");
    coeff_ *= c;
    for (int i = 0; i < nvars_; ++i) mono_[i] += e[i];
}

void FactoredFn::mul_factor(const LaurentPoly& f, long long e) {
    if (f.is_zero()) fail("ZeroDenominator", "factored form cannot represent zero");
    if (e == 0) return;
    LaurentPoly g = f;
    // peel off monomial content, integer content and the leading sign so that
    // equal factors always land on the same map key
    Expo m = g.min_exponents();
    bool shift = false;
    for (long long x : m)
        if (x != 0) shift = true;
    if (shift) {
        Expo neg(m.size());
        for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
        g = g.mul_monomial(neg, Int(1));
        for (int i = 0; i < nvars_; ++i) mono_[i] += e * m[i];
    }
    Int c = g.content();
    if (g.leading().second < 0) c = -c;
    if (c != 1) {
        g = g.div_content(c);
        coeff_ *= rat_pow(Rat(c), e);
    }
    if (g.is_one()) return;
    auto it = factors_.find(g);
    if (it == factors_.end()) {
        factors_.emplace(std::move(g), e);
    } else {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactoredFn::mul_inplace(const FactoredFn& rhs, long long power) {
    if (power == 0) return;
    coeff_ *= rat_pow(rhs.coeff_, power);
    for (int i = 0; i < nvars_; ++i) mono_[i] += power * rhs.mono_[i];
    for (const auto& [f, e] : rhs.factors_) {
        auto it = factors_.find(f);
        if (it == factors_.end()) {
            factors_.emplace(f, e * power);
        } else {
            it->second += e * power;
            if (it->second == 0) factors_.erase(it);
        }
    }
}

FactoredFn FactoredFn::pow(long long e) const {
    FactoredFn r(nvars_);
    r.mul_inplace(*this, e);
    return r;
}

FactoredFn FactoredFn::one_plus(const FactoredFn& x) {
    // write x = N/D with N, D expanded polynomials; 1 + x = (D + N)/D
    LaurentPoly num = LaurentPoly::constant(x.nvars_, Int(1));
    LaurentPoly den = LaurentPoly::constant(x.nvars_, Int(1));
    Expo mp(x.nvars_, 0), mn(x.nvars_, 0);
    for (int i = 0; i < x.nvars_; ++i) {
        if (x.mono_[i] >= 0)
            mp[i] = x.mono_[i];
        else
            mn[i] = -x.mono_[i];
    }
    num = num.mul_monomial(mp, x.coeff_.get_num());
    den = den.mul_monomial(mn, x.coeff_.get_den());
    for (const auto& [f, e] : x.factors_) {
        if (e > 0)
            num = num * f.pow((unsigned long)e);
        else
            den = den * f.pow((unsigned long)(-e));
    }
    LaurentPoly s = den + num;
    if (s.is_zero()) fail("ZeroDenominator", "factored form cannot represent zero");
    // divide D + N by D, reusing the known factorization of the denominator
    FactoredFn r(x.nvars_);
    r.mul_factor(s, 1);
    r.coeff_ /= x.coeff_.get_den();
    for (int i = 0; i < x.nvars_; ++i) r.mono_[i] -= mn[i];
    for (const auto& [f, e] : x.factors_)
        if (e < 0) r.mul_factor(f, e);
    return r;
}

std::optional<Expo> FactoredFn::as_unit_monomial() const {
    if (!factors_.empty() || coeff_ != 1) return std::nullopt;
    return mono_;
}

RationalFn FactoredFn::expand(const SimplifyOptions& opts) const {
    LaurentPoly num = LaurentPoly::constant(nvars_, coeff_.get_num());
    LaurentPoly den = LaurentPoly::constant(nvars_, coeff_.get_den());
    Expo mp(nvars_, 0), mn(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) {
        if (mono_[i] >= 0)
            mp[i] = mono_[i];
        else
            mn[i] = -mono_[i];
    }
    num = num.mul_monomial(mp, Int(1));
    den = den.mul_monomial(mn, Int(1));
    for (const auto& [f, e] : factors_) {
        if (e > 0)
            num = num * f.pow((unsigned long)e);
        else
            den = den * f.pow((unsigned long)(-e));
    }
    RationalFn r(std::move(num), std::move(den));
    r.simplify(opts);
    return r;
}

std::optional<std::uint64_t> FactoredFn::eval_mod(const std::vector<std::uint64_t>& x,
                                                  std::uint64_t p) const {
    std::uint64_t cn = mod_of(coeff_.get_num(), p);
    std::uint64_t cd = mod_of(coeff_.get_den(), p);
    if (cd == 0) return std::nullopt;
    std::uint64_t v = mod_mul(cn, mod_inv(cd, p), p);
    for (int i = 0; i < nvars_; ++i) {
        if (mono_[i] == 0) continue;
        std::uint64_t base = x[i] % p;
        if (base == 0) return std::nullopt;
        std::uint64_t pw = mod_pow(base, std::uint64_t(mono_[i] > 0 ? mono_[i] : -mono_[i]), p);
        if (mono_[i] < 0) pw = mod_inv(pw, p);
        v = mod_mul(v, pw, p);
    }
    for (const auto& [f, e] : factors_) {
        auto fv = f.eval_mod(x, p);
        if (!fv || *fv == 0) return std::nullopt;
        std::uint64_t pw = mod_pow(*fv, std::uint64_t(e > 0 ? e : -e), p);
        if (e < 0) pw = mod_inv(pw, p);
        v = mod_mul(v, pw, p);
    }
    return v;
}

} // namespace qpc
