#include "qpcluster/xmap.hpp"

#include <cmath>
#include <random>

namespace qpc {

namespace {

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) fail("ExponentOverflow", "exponent does not fit a machine word");
    return v.get_si();
}

Expo to_expo(const ZVec& v) {
    Expo e(v.size());
    for (size_t i = 0; i < v.size(); ++i) e[i] = to_ll(v[i]);
    return e;
}

Expo unit_expo(int n, int j) {
    Expo e(n, 0);
    e[j] = 1;
    return e;
}

// Integer data of one step at one seed: everything the symbolic engine and
// the numeric evaluators need, in character-basis coordinates.
struct StepData {
    bool is_mutation = false;
    Expo factor_expo;            // mutation: ε e_k
    std::vector<long long> h;    // mutation: {e_k, b_j} per character j
    std::vector<Expo> iso_cols;  // isomorphism: exponent of the image of z^{b_j}
    Seed target;
};

std::vector<long long> integral_vec(const QVec& v, const char* what) {
    std::vector<long long> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) fail("NonIntegralExponent", what);
        out[i] = to_ll(Rat(v[i]).get_num());
    }
    return out;
}

StepData mutation_data(const Seed& s, int k, int sign) {
    const FixedData& fd = *s.fd;
    StepData sd;
    sd.is_mutation = true;
    QVec ek = to_qvec(s.basis.col(k));
    // h_j = {e_k, b_j} = (Λᵀ e_k) · b_j
    QVec u = fd.lambda.transpose() * ek;
    sd.h = integral_vec(fd.n_basis.transpose() * u,
                        "character pairs non-integrally with the seed vector");
    QVec m = fd.n_basis_inv * ek;
    for (auto& x : m) x *= sign;
    sd.factor_expo = Expo(integral_vec(m, "seed vector is not a character of the finer lattice"));
    sd.target = mutate_seed(s, k, sign);
    return sd;
}

StepData iso_data(const SeedIso& iso) {
    const FixedData& fd = *iso.source.fd;
    int n = fd.rank();
    StepData sd;
    QMat c = fd.n_basis_inv * iso.matrix.unimodular_inverse().to_q() * fd.n_basis;
    sd.iso_cols.reserve(n);
    for (int j = 0; j < n; ++j) {
        QVec col = c.col(j);
        for (auto& x : col) x *= iso.sign;
        sd.iso_cols.push_back(
            Expo(integral_vec(col, "map does not act integrally on characters")));
    }
    sd.target = iso.target;
    return sd;
}

StepData step_data(const Seed& s, const WordStep& st) {
    if (const auto* m = std::get_if<MutStep>(&st)) return mutation_data(s, m->k, m->sign);
    const auto& is = std::get<IsoStep>(st);
    return iso_data(make_isomorphism(s, is.perm, is.sign, is.matrix));
}

std::vector<StepData> word_step_data(const ClusterWord& w) {
    std::vector<StepData> out;
    out.reserve(w.steps.size());
    Seed cur = w.source;
    for (const auto& st : w.steps) {
        out.push_back(step_data(cur, st));
        cur = out.back().target;
    }
    return out;
}

XMap xmap_of_data(const Seed& source, const StepData& sd) {
    int n = source.rank();
    XMap m;
    m.source = source;
    m.target = sd.target;
    m.images.reserve(n);
    if (sd.is_mutation) {
        LaurentPoly binom = LaurentPoly::constant(n, Int(1));
        binom.add_term(sd.factor_expo, Int(1));
        RationalFn base = RationalFn::from_poly(binom);
        for (int j = 0; j < n; ++j)
            m.images.push_back(RationalFn::monomial(unit_expo(n, j)) * base.pow(sd.h[j]));
    } else {
        for (int j = 0; j < n; ++j) m.images.push_back(RationalFn::monomial(sd.iso_cols[j]));
    }
    return m;
}

} // namespace

XMap xmap_identity(const Seed& s) {
    int n = s.rank();
    XMap m;
    m.source = s;
    m.target = s;
    for (int j = 0; j < n; ++j) m.images.push_back(RationalFn::monomial(unit_expo(n, j)));
    return m;
}

XMap xmap_of_mutation(const Seed& s, int k, int sign) {
    return xmap_of_data(s, mutation_data(s, k, sign));
}

XMap xmap_of_iso(const SeedIso& iso) {
    return xmap_of_data(iso.source, iso_data(iso));
}

XMap xmap_of_step(const Seed& s, const WordStep& st) {
    return xmap_of_data(s, step_data(s, st));
}

namespace {

const LaurentPoly& pow_of(std::vector<LaurentPoly>& table, const LaurentPoly& base,
                          long long e) {
    while (static_cast<long long>(table.size()) <= e) {
        if (table.empty())
            table.push_back(LaurentPoly::constant(base.nvars(), Int(1)));
        else
            table.push_back(table.back() * base);
    }
    return table[size_t(e)];
}

// Substitute the images of `inner` into the Laurent polynomial p, over a
// single common denominator.
RationalFn substitute(const LaurentPoly& p, const XMap& inner) {
    int n = p.nvars();
    if (p.is_zero()) return RationalFn::from_poly(p);
    std::vector<long long> lo(n, 0), hi(n, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < n; ++i) {
            if (first || e[i] < lo[i]) lo[i] = e[i];
            if (first || e[i] > hi[i]) hi[i] = e[i];
        }
        first = false;
    }
    std::vector<std::vector<LaurentPoly>> npow(n), dpow(n);
    LaurentPoly den = LaurentPoly::constant(n, Int(1));
    for (int i = 0; i < n; ++i) {
        if (lo[i] < 0) den = den * pow_of(npow[i], inner.images[i].num(), -lo[i]);
        if (hi[i] > 0) den = den * pow_of(dpow[i], inner.images[i].den(), hi[i]);
    }
    LaurentPoly num(n);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(n, c);
        for (int i = 0; i < n; ++i) {
            long long en = e[i] + (lo[i] < 0 ? -lo[i] : 0);
            long long ed = (hi[i] > 0 ? hi[i] : 0) - e[i];
            if (en > 0) term = term * pow_of(npow[i], inner.images[i].num(), en);
            if (ed > 0) term = term * pow_of(dpow[i], inner.images[i].den(), ed);
        }
        num = num + term;
    }
    return RationalFn(std::move(num), std::move(den));
}

} // namespace

XMap xmap_compose(const XMap& outer, const XMap& inner, const SimplifyOptions& opts) {
    if (!(inner.target == outer.source))
        fail("NotComposable", "inner target differs from outer source");
    XMap m;
    m.source = inner.source;
    m.target = outer.target;
    m.images.reserve(outer.images.size());
    for (const auto& img : outer.images) {
        RationalFn r = substitute(img.num(), inner) / substitute(img.den(), inner);
        r.simplify(opts);
        m.images.push_back(std::move(r));
    }
    return m;
}

namespace {

std::vector<FactoredFn> walk_factored(const ClusterWord& w, Seed& cur) {
    int n = w.source.rank();
    std::vector<FactoredFn> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) images.push_back(FactoredFn::monomial(unit_expo(n, j)));

    cur = w.source;
    for (const auto& st : w.steps) {
        StepData sd = step_data(cur, st);
        if (sd.is_mutation) {
            FactoredFn arg(n);
            for (int c = 0; c < n; ++c) arg.mul_inplace(images[c], sd.factor_expo[c]);
            FactoredFn factor = FactoredFn::one_plus(arg);
            for (int j = 0; j < n; ++j) images[j].mul_inplace(factor, sd.h[j]);
        } else {
            std::vector<FactoredFn> next;
            next.reserve(n);
            for (int j = 0; j < n; ++j) {
                FactoredFn f(n);
                for (int c = 0; c < n; ++c) f.mul_inplace(images[c], sd.iso_cols[j][c]);
                next.push_back(std::move(f));
            }
            images = std::move(next);
        }
        cur = sd.target;
    }
    return images;
}

} // namespace

XMap xmap_of_word(const ClusterWord& w, const SimplifyOptions& opts) {
    Seed cur = w.source;
    std::vector<FactoredFn> images = walk_factored(w, cur);

    XMap m;
    m.source = w.source;
    m.target = cur;
    m.images.reserve(images.size());
    for (const auto& f : images) m.images.push_back(f.expand(opts));
    return m;
}

std::vector<FactoredFn> word_images(const ClusterWord& w) {
    Seed cur = w.source;
    return walk_factored(w, cur);
}

FactoredFn word_pullback(const ClusterWord& w, const ZVec& expo) {
    std::vector<FactoredFn> images = word_images(w);
    int n = w.source.rank();
    FactoredFn f(n);
    for (int j = 0; j < n; ++j) {
        long long e = to_ll(expo[j]);
        if (e != 0) f.mul_inplace(images[j], e);
    }
    return f;
}

RationalFn pullback(const XMap& m, const ZVec& expo) {
    int n = int(m.images.size());
    RationalFn r = RationalFn::one(n);
    for (int j = 0; j < n; ++j) {
        long long e = to_ll(expo[j]);
        if (e != 0) r = r * m.images[j].pow(e);
    }
    return r;
}

bool xmap_is_identity(const XMap& m) {
    int n = int(m.images.size());
    for (int j = 0; j < n; ++j) {
        auto mono = m.images[j].as_unit_monomial();
        if (mono && *mono == unit_expo(n, j)) continue;
        if (!ratfn_equal(m.images[j], RationalFn::monomial(unit_expo(n, j)))) return false;
    }
    return true;
}

bool xmap_equal(const XMap& a, const XMap& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    if (a.images.size() != b.images.size()) return false;
    for (size_t j = 0; j < a.images.size(); ++j)
        if (!ratfn_equal(a.images[j], b.images[j])) return false;
    return true;
}

std::vector<Rat> xmap_eval_q(const XMap& m, const std::vector<Rat>& x) {
    std::vector<Rat> out;
    out.reserve(m.images.size());
    for (const auto& img : m.images) out.push_back(img.eval_q(x));
    return out;
}

std::vector<double> xmap_eval_d(const XMap& m, const std::vector<double>& x) {
    std::vector<double> out;
    out.reserve(m.images.size());
    for (const auto& img : m.images) out.push_back(img.eval_d(x));
    return out;
}

namespace {

template <class Num, class PowFn>
std::vector<Num> eval_steps(const std::vector<StepData>& steps, std::vector<Num> x,
                            const Num& one, PowFn pw) {
    int n = int(x.size());
    for (const auto& sd : steps) {
        if (sd.is_mutation) {
            Num g = one;
            for (int c = 0; c < n; ++c)
                if (sd.factor_expo[c] != 0) g = g * pw(x[c], sd.factor_expo[c]);
            Num f = one + g;
            for (int j = 0; j < n; ++j)
                if (sd.h[j] != 0) x[j] = x[j] * pw(f, sd.h[j]);
        } else {
            std::vector<Num> next(n, one);
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < n; ++c)
                    if (sd.iso_cols[j][c] != 0)
                        next[j] = next[j] * pw(x[c], sd.iso_cols[j][c]);
            x = std::move(next);
        }
    }
    return x;
}

} // namespace

std::vector<Rat> word_eval_q(const ClusterWord& w, std::vector<Rat> x) {
    if (int(x.size()) != w.source.rank()) fail("InvalidWord", "point has wrong dimension");
    auto pw = [](const Rat& b, long long e) {
        if (b == 0 && e < 0) fail("PoleAtPoint", "negative power of zero");
        return rat_pow(b, e);
    };
    return eval_steps(word_step_data(w), std::move(x), Rat(1), pw);
}

std::vector<double> word_eval_d(const ClusterWord& w, std::vector<double> x) {
    if (int(x.size()) != w.source.rank()) fail("InvalidWord", "point has wrong dimension");
    auto pw = [](double b, long long e) { return std::pow(b, double(e)); };
    return eval_steps(word_step_data(w), std::move(x), 1.0, pw);
}

namespace {

// modular arithmetic wrapper so eval_steps can reject zero bases via a flag
struct ModVal {
    std::uint64_t v = 0;
    bool ok = true;
    ModVal operator*(const ModVal& o) const {
        if (!ok || !o.ok) return {0, false};
        return {mod_mul(v, o.v, kFastPrime), true};
    }
    ModVal operator+(const ModVal& o) const {
        if (!ok || !o.ok) return {0, false};
        std::uint64_t s = v + o.v;
        if (s >= kFastPrime) s -= kFastPrime;
        return {s, true};
    }
};

} // namespace

std::optional<std::vector<std::uint64_t>> word_eval_mod(const ClusterWord& w,
                                                        std::vector<std::uint64_t> x,
                                                        std::uint64_t p) {
    if (p != kFastPrime) fail("InvalidWord", "unsupported modulus");
    if (int(x.size()) != w.source.rank()) fail("InvalidWord", "point has wrong dimension");
    std::vector<ModVal> vals;
    vals.reserve(x.size());
    for (auto v : x) vals.push_back({v % p, true});
    auto pw = [](const ModVal& b, long long e) -> ModVal {
        if (!b.ok) return b;
        // a vanishing base makes the whole sample unusable: the point sits on
        // an intermediate boundary, so equality says nothing there
        if (b.v == 0) return {0, false};
        std::uint64_t m = mod_pow(b.v, std::uint64_t(e > 0 ? e : -e), kFastPrime);
        if (e < 0) m = mod_inv(m, kFastPrime);
        return {m, true};
    };
    vals = eval_steps(word_step_data(w), std::move(vals), ModVal{1, true}, pw);
    std::vector<std::uint64_t> out;
    out.reserve(vals.size());
    for (const auto& v : vals) {
        if (!v.ok) return std::nullopt;
        out.push_back(v.v);
    }
    return out;
}

bool is_trivial_word(const ClusterWord& w, const SimplifyOptions& opts) {
    if (!(word_target(w) == w.source)) return false;
    int n = w.source.rank();

    if (opts.fast_path) {
        std::mt19937_64 rng(opts.rng_seed);
        std::uniform_int_distribution<std::uint64_t> dist(2, kFastPrime - 2);
        int done = 0, attempts = 0;
        while (done < opts.sample_points && attempts < 8 * opts.sample_points) {
            ++attempts;
            std::vector<std::uint64_t> x(n);
            for (auto& v : x) v = dist(rng);
            auto r = word_eval_mod(w, x, kFastPrime);
            if (!r) continue;  // boundary point, resample
            if (*r != x) return false;
            ++done;
        }
    }

    // symbolic confirmation
    XMap m = xmap_of_word(w, opts);
    return xmap_is_identity(m);
}

bool words_equal(const ClusterWord& a, const ClusterWord& b, const SimplifyOptions& opts) {
    if (!(a.source == b.source)) return false;
    if (!(word_target(a) == word_target(b))) return false;
    return is_trivial_word(compose_word(a, invert_word(b)), opts);
}

} // namespace qpc
