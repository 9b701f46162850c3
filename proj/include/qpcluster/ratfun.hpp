#pragma once

// Rational functions in the character lattice variables.  Two forms:
//
//  * RationalFn: an expanded numerator/denominator pair in a weak canonical
//    form (denominator has trivial monomial content and a positive leading
//    coefficient; a joint integer content is removed).  Equality is decided
//    by cross-multiplication, never by reliance on full canonicalization.
//
//  * FactoredFn: coefficient * monomial * product of polynomial factors with
//    integer exponents.  Multiplicative operations cancel identical factors
//    exactly, which keeps long pullback compositions from expanding.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "qpcluster/laurent.hpp"

namespace qpc {

struct SimplifyOptions {
    // term-count bound above which a full gcd pass is attempted
    std::size_t gcd_threshold = 5000;
    // modular-evaluation rejection test ahead of symbolic identity checks
    bool fast_path = true;
    int sample_points = 3;
    std::uint64_t rng_seed = 0x5eed5eed5eedULL;
};

class RationalFn {
public:
    RationalFn() = default;
    RationalFn(LaurentPoly num, LaurentPoly den);

    static RationalFn from_poly(const LaurentPoly& p);
    static RationalFn monomial(const Expo& e, const Int& c = Int(1));
    static RationalFn one(int nvars);

    int nvars() const { return num_.nvars(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // Exponent vector when this is a single Laurent monomial with
    // coefficient one, nullopt otherwise.
    std::optional<Expo> as_unit_monomial() const;

    RationalFn operator+(const RationalFn& rhs) const;
    RationalFn operator-(const RationalFn& rhs) const;
    RationalFn operator*(const RationalFn& rhs) const;
    RationalFn operator/(const RationalFn& rhs) const;
    RationalFn inverse() const;
    RationalFn pow(long long e) const;

    // Attempt num/den gcd reduction when either side exceeds the
    // configured term-count threshold.
    void simplify(const SimplifyOptions& opts);

    Rat eval_q(const QVec& x) const;       // PoleAtPoint on vanishing denominator
    double eval_d(const std::vector<double>& x) const;
    std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& x,
                                          std::uint64_t p) const;

    std::string to_string() const;

private:
    void normalize();

    LaurentPoly num_, den_;
};

// Equality as rational functions, by cross-multiplication.
bool ratfn_equal(const RationalFn& a, const RationalFn& b);

Rat rat_pow(const Rat& b, long long e);

class FactoredFn {
public:
    explicit FactoredFn(int nvars)
        : nvars_(nvars), coeff_(1), mono_(nvars, 0) {}

    static FactoredFn monomial(const Expo& e, const Rat& c = Rat(1));

    int nvars() const { return nvars_; }
    const Rat& coeff() const { return coeff_; }

    void mul_monomial(const Expo& e, const Rat& c);
    // Multiply by f^e for a non-monomial polynomial f; content and monomial
    // parts of f are folded into the coefficient and monomial.
    void mul_factor(const LaurentPoly& f, long long e);
    void mul_inplace(const FactoredFn& rhs, long long power = 1);
    FactoredFn pow(long long e) const;

    // 1 + x, with the resulting numerator expanded into a single new factor.
    static FactoredFn one_plus(const FactoredFn& x);

    std::optional<Expo> as_unit_monomial() const;
    RationalFn expand(const SimplifyOptions& opts = {}) const;

    std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& x,
                                          std::uint64_t p) const;

private:
    int nvars_ = 0;
    Rat coeff_;
    Expo mono_;
    std::map<LaurentPoly, long long> factors_;
};

} // namespace qpc
