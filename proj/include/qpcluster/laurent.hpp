#pragma once

// Sparse multivariate Laurent polynomials with GMP integer coefficients.
// Terms are kept in graded-lexicographic order (total degree first, then
// lexicographic on exponent vectors), which fixes every printed form and
// every iteration order in the library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpcluster/linalg.hpp"

namespace qpc {

using Expo = std::vector<long long>;

long long expo_degree(const Expo& e);

struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<Expo, Int, TermOrder>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Int& c);
    static LaurentPoly monomial(const Expo& e, const Int& c = Int(1));

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // As the single term (exponent, coefficient); requires is_monomial().
    std::pair<Expo, Int> single_term() const;

    void add_term(const Expo& e, const Int& c);

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& rhs) const = default;
    bool operator<(const LaurentPoly& rhs) const;  // arbitrary total order, for registries

    LaurentPoly mul_monomial(const Expo& e, const Int& c) const;
    LaurentPoly pow(unsigned long k) const;

    // Largest term in the graded-lex order.
    const std::pair<const Expo, Int>& leading() const;

    // gcd of all coefficients (non-negative).
    Int content() const;
    // Componentwise minimum of exponent vectors; the monomial content.
    Expo min_exponents() const;
    // Divide every coefficient by d (must divide exactly).
    LaurentPoly div_content(const Int& d) const;

    // Exact quotient in the Laurent ring, or nullopt when not divisible.
    std::optional<LaurentPoly> exact_div(const LaurentPoly& d) const;

    // Evaluation.  Rational evaluation insists the point avoid coordinate
    // hyperplanes whenever a negative exponent appears.
    Rat eval_q(const QVec& x) const;
    double eval_d(const std::vector<double>& x) const;
    // Value mod p, or nullopt if a negative power of zero is required.
    std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& x,
                                          std::uint64_t p) const;

    std::string to_string() const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

// gcd in the Laurent ring, normalized to have integer content >= 0, trivial
// monomial content and positive leading coefficient.  Uses a primitive
// pseudo-remainder sequence; intended for occasional simplification, not as
// a hot path.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Modular arithmetic helpers shared with the fast identity-test path.
// The modulus is the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kFastPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_of(const Int& c, std::uint64_t p);

} // namespace qpc
