#pragma once

// The X-functor: symbolic pullbacks of torus characters along mutations,
// signed isomorphisms and whole words.
//
// Every exponent vector is written in the character basis of N (the finer
// basis when the fixed data has one, the initial seed basis otherwise).
// images[j] is the pullback of z^{b_j} for the j-th character basis vector.
//
// A mutation μ_k^ε pulls z^n back to z^n (1 + z^{ε e_k})^{{e_k, n}}; a
// signed isomorphism εσ pulls z^m back to z^{ε σ♭⁻¹ m}.  Words evaluate by
// substitution, so that stepwise numeric iteration in word order agrees with
// evaluation of the composed map.

#include <cstdint>
#include <optional>
#include <vector>

#include "qpcluster/ratfun.hpp"
#include "qpcluster/seed.hpp"

namespace qpc {

struct XMap {
    Seed source, target;
    std::vector<RationalFn> images;
};

XMap xmap_identity(const Seed& s);
XMap xmap_of_mutation(const Seed& s, int k, int sign);
XMap xmap_of_iso(const SeedIso& iso);
XMap xmap_of_step(const Seed& s, const WordStep& st);

// outer ∘ inner by substituting inner's images into outer's.
XMap xmap_compose(const XMap& outer, const XMap& inner,
                  const SimplifyOptions& opts = {});

XMap xmap_of_word(const ClusterWord& w, const SimplifyOptions& opts = {});

// Pullback of an arbitrary character, given in character-basis coordinates.
RationalFn pullback(const XMap& m, const ZVec& expo);

// The same images kept in factored form, where matching factors cancel
// exactly; monomial pullbacks are then recognized without any gcd work.
std::vector<FactoredFn> word_images(const ClusterWord& w);
FactoredFn word_pullback(const ClusterWord& w, const ZVec& expo);

bool xmap_is_identity(const XMap& m);
bool xmap_equal(const XMap& a, const XMap& b);

std::vector<Rat> xmap_eval_q(const XMap& m, const std::vector<Rat>& x);
std::vector<double> xmap_eval_d(const XMap& m, const std::vector<double>& x);

// Stepwise evaluation of a word at a point, never forming symbolic images.
std::vector<Rat> word_eval_q(const ClusterWord& w, std::vector<Rat> x);
std::vector<double> word_eval_d(const ClusterWord& w, std::vector<double> x);
std::optional<std::vector<std::uint64_t>> word_eval_mod(const ClusterWord& w,
                                                        std::vector<std::uint64_t> x,
                                                        std::uint64_t p);

// Trivial cluster transformation: target seed equals the source seed exactly
// and the X-map is the identity.  The modular stepwise evaluation serves as
// a rejection fast path; acceptance is always symbolic.
bool is_trivial_word(const ClusterWord& w, const SimplifyOptions& opts = {});

// a and b induce the same transformation: a ∘ b⁻¹ is trivial.
bool words_equal(const ClusterWord& a, const ClusterWord& b,
                 const SimplifyOptions& opts = {});

} // namespace qpc
