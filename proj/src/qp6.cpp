#include "qpcluster/qp6.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "qpcluster/error.hpp"

namespace qpc {

namespace {

Int zi(long long v) { return Int(static_cast<long>(v)); }

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) fail("ExponentOverflow", "exponent does not fit a machine word");
    return v.get_si();
}

ZVec zrow(std::initializer_list<long long> vals) {
    ZVec r;
    r.reserve(vals.size());
    for (long long v : vals) r.push_back(zi(v));
    return r;
}

Expo expo_of(const ZVec& v) {
    Expo e;
    e.reserve(v.size());
    for (const Int& c : v) e.push_back(to_ll(c));
    return e;
}

RationalFn char_fn(const ZVec& v) { return RationalFn::monomial(expo_of(v)); }

std::string vec_str(const ZVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

ZVec unit_vec(int n, int j) {
    ZVec v(std::size_t(n), zi(0));
    v[std::size_t(j)] = zi(1);
    return v;
}

// Integral coordinates of an ambient vector in the finer basis.
ZVec finer_coords(const FixedData& fd, const ZVec& v) {
    QVec c = fd.n_basis_inv * to_qvec(v);
    ZVec r;
    r.reserve(c.size());
    for (const Rat& x : c) {
        if (x.get_den() != 1)
            fail("LatticeValidationFailed", "vector does not lie in the finer lattice");
        r.push_back(x.get_num());
    }
    return r;
}

const CatalogGenerator& gen_named(const CatalogEntry& e, const std::string& name) {
    for (const auto& g : e.generators)
        if (g.name == name) return g;
    fail("UnknownLabel", "entry " + e.label + " has no generator named " + name);
}

std::vector<int> swap_pairs(int n, std::initializer_list<std::pair<int, int>> sw) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[std::size_t(i)] = i;
    for (const auto& [a, b] : sw) std::swap(p[std::size_t(a)], p[std::size_t(b)]);
    return p;
}

// The generator words of the catalog entry are step lists over basis
// positions, so they can be rebound to the same seed over the finer lattice.
ClusterWord word_over(const Seed& s, const CatalogEntry& e, std::vector<WordStep> lead,
                      std::initializer_list<const char*> names) {
    ClusterWord w{s, std::move(lead)};
    for (const char* name : names) {
        const auto& steps = gen_named(e, name).word.steps;
        w.steps.insert(w.steps.end(), steps.begin(), steps.end());
    }
    return w;
}

std::optional<Rat> exact_fourth_root(const Rat& a) {
    if (sgn(a) <= 0) return std::nullopt;
    Rat c = a;
    c.canonicalize();
    Int num(c.get_num()), den(c.get_den());
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 4) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 4) == 0) return std::nullopt;
    return Rat(rn) / Rat(rd);
}

// Exponent vector of a monomial pullback, nullopt when the image is not a
// Laurent monomial with unit coefficient.
std::optional<ZVec> monomial_transport(const ClusterWord& w, const ZVec& expo) {
    auto m = word_pullback(w, expo).as_unit_monomial();
    if (!m) return std::nullopt;
    ZVec r;
    r.reserve(m->size());
    for (long long c : *m) r.push_back(zi(c));
    return r;
}

}  // namespace

QP6Context build_qp6_context() {
    QP6Context ctx;
    ctx.entry = catalog_entry("E5(1)");
    const Seed& base = ctx.entry.seed;
    const int n = base.rank();

    // Finer lattice: quarters of the six roots, then the two quarter
    // characters that carry f and g.
    const ZVec phi1 = zrow({1, 1, 0, 0, -1, -1, 0, 0});
    const ZVec phi2 = zrow({0, 0, 1, 1, 0, 0, -1, -1});
    QMat finer(n, n);
    const Rat quarter(1, 4);
    for (int j = 0; j < n; ++j) {
        const ZVec& col = j < 6 ? ctx.entry.roots[std::size_t(j)] : (j == 6 ? phi1 : phi2);
        for (int i = 0; i < n; ++i) finer.at(i, j) = Rat(col[std::size_t(i)]) * quarter;
    }

    FixedDataPtr fd;
    try {
        fd = new_fixed_data(base.fd->lambda, finer, base.fd->labels);
    } catch (const Error& err) {
        fail("LatticeValidationFailed",
             std::string("the parameter lattice was rejected: ") + err.what());
    }
    ctx.seed = initial_seed(fd);

    std::vector<WordStep> iota3{IsoStep{swap_pairs(n, {{2, 6}, {3, 7}}), -1, std::nullopt}};
    ctx.c1 = word_over(ctx.seed, ctx.entry, std::move(iota3),
                       {"s0", "s1", "s4", "s5", "s3", "s4", "s5", "s3"});
    ctx.c2 = word_over(ctx.seed, ctx.entry, gen_named(ctx.entry, "iota1").word.steps,
                       {"s4", "s5", "s0", "s1", "s2", "s0", "s1", "s2"});

    for (int i = 0; i < 6; ++i) ctx.a.push_back(vec_scale(unit_vec(n, i), zi(4)));
    ctx.f = unit_vec(n, 6);
    ctx.g = unit_vec(n, 7);
    ctx.q = finer_coords(*fd, ctx.entry.delta);

    // b_1..b_8 as printed: quarter powers of multiplicative parameters.
    ctx.b = {zrow({1, -1, -2, 0, 0, 0, 0, 0}), zrow({-3, -1, -2, 0, 0, 0, 0, 0}),
             zrow({0, 0, 0, -2, 1, -1, 0, 0}), zrow({0, 0, 0, -2, -3, -1, 0, 0}),
             zrow({1, -1, 2, 0, 0, 0, 0, 0}),  zrow({1, 3, 2, 0, 0, 0, 0, 0}),
             zrow({0, 0, 0, 2, 1, -1, 0, 0}),  zrow({0, 0, 0, 2, 1, 3, 0, 0})};
    return ctx;
}

std::pair<XMap, XMap> qp6_maps(const QP6Context& ctx, const SimplifyOptions& opts) {
    return {xmap_of_word(ctx.c1, opts), xmap_of_word(ctx.c2, opts)};
}

std::vector<CheckResult> verify_qp6_identities(const QP6Context& ctx,
                                               const SimplifyOptions& opts) {
    std::vector<CheckResult> out;
    const FixedData& fd = *ctx.seed.fd;
    const int n = ctx.seed.rank();
    auto row = [&out](const std::string& check, bool passed, std::string witness = {}) {
        out.push_back({check, passed, passed ? std::string() : std::move(witness)});
    };

    row("the seed lattice sits inside the finer lattice",
        fd.has_finer_lattice && fd.n_basis_inv.is_integral(),
        "some basis vector has fractional coordinates");

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < 6 && ok; ++i) {
            ZVec got = finer_coords(fd, ctx.entry.roots[std::size_t(i)]);
            if (got != ctx.a[std::size_t(i)]) {
                ok = false;
                w = "root " + std::to_string(i) + " has coordinates " + vec_str(got);
            }
        }
        row("the roots are the quadrupled coordinate characters", ok, w);
    }

    {
        // q = z^delta and, in exponents, delta = sum of the decomposition
        // over the roots: q equals the monomial a0 a1 a2^2 a3^2 a4 a5.
        ZVec combo(std::size_t(n), zi(0));
        const auto& decomp = ctx.entry.delta_decomps.front();
        for (int i = 0; i < 6; ++i)
            combo = vec_add(combo, vec_scale(ctx.a[std::size_t(i)], zi(decomp[std::size_t(i)])));
        row("q is the product of the parameters with the null root exponents", combo == ctx.q,
            "expected " + vec_str(ctx.q) + ", the combination gives " + vec_str(combo));
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i) {
            ZVec coords = finer_coords(fd, unit_vec(n, i));
            ZVec expect = i < 4 ? vec_neg(coords) : coords;
            const bool uses_f = i == 0 || i == 1 || i == 4 || i == 5;
            expect = vec_add(expect, uses_f ? ctx.f : ctx.g);
            if (expect != ctx.b[std::size_t(i)]) {
                ok = false;
                w = "b" + std::to_string(i + 1) + " printed as " +
                    vec_str(ctx.b[std::size_t(i)]) + " but the cluster form gives " +
                    vec_str(expect);
            }
        }
        row("the b characters match both printed forms", ok, w);
    }

    row("the transformation words return to the seed",
        word_target(ctx.c1) == ctx.seed && word_target(ctx.c2) == ctx.seed,
        "a word ends at a different seed");

    row("c1 is an involution", is_trivial_word(compose_word(ctx.c1, ctx.c1), opts),
        "c1 squared is not a trivial cluster transformation");
    row("c2 is an involution", is_trivial_word(compose_word(ctx.c2, ctx.c2), opts),
        "c2 squared is not a trivial cluster transformation");

    auto transport_row = [&](const char* name, const ClusterWord& word, int moved,
                             const ZVec& dynamical) {
        bool ok = true;
        std::string w;
        auto expect = [&](const ZVec& from, const ZVec& to, const std::string& label) {
            if (!ok) return;
            auto got = monomial_transport(word, from);
            if (!got) {
                ok = false;
                w = "the image of " + label + " is not a monomial";
            } else if (*got != to) {
                ok = false;
                w = "the image of " + label + " is " + vec_str(*got) + ", expected " +
                    vec_str(to);
            }
        };
        for (int i = 0; i < 6; ++i) {
            ZVec to = ctx.a[std::size_t(i)];
            if (i == moved) to = vec_sub(to, ctx.q);
            expect(ctx.a[std::size_t(i)], to, "a" + std::to_string(i));
        }
        expect(ctx.q, vec_neg(ctx.q), "q");
        expect(moved == 2 ? ctx.g : ctx.f, moved == 2 ? ctx.g : ctx.f, "the spectator variable");
        if (ok && monomial_transport(word, dynamical)) {
            ok = false;
            w = "the dynamical variable pulls back to a monomial";
        }
        row(name, ok, w);
    };
    transport_row("parameter transport under c1", ctx.c1, 2, ctx.f);
    transport_row("parameter transport under c2", ctx.c2, 3, ctx.g);

    // f fbar = b7 b8 (g + b3)(g + b4) / ((g + b7)(g + b8)) and the mirror
    // identity for g gunder, with indices one higher than the storage.
    RationalFn fbar = word_images(ctx.c1)[6].expand(opts);
    RationalFn gunder = word_images(ctx.c2)[7].expand(opts);
    RationalFn fch = char_fn(ctx.f);
    RationalFn gch = char_fn(ctx.g);
    auto pair_fraction = [&](const RationalFn& var, int i, int j, int k, int l) {
        return char_fn(vec_add(ctx.b[std::size_t(k)], ctx.b[std::size_t(l)])) *
               (var + char_fn(ctx.b[std::size_t(i)])) * (var + char_fn(ctx.b[std::size_t(j)])) /
               ((var + char_fn(ctx.b[std::size_t(k)])) * (var + char_fn(ctx.b[std::size_t(l)])));
    };
    RationalFn lhs_f = fch * fbar;
    RationalFn rhs_f = pair_fraction(gch, 2, 3, 6, 7);
    RationalFn lhs_g = gch * gunder;
    RationalFn rhs_g = pair_fraction(fch, 4, 5, 0, 1);
    row("the f fbar identity holds", ratfn_equal(lhs_f, rhs_f),
        "f times the image of f differs from the b fraction");
    row("the g gunder identity holds", ratfn_equal(lhs_g, rhs_g),
        "g times the image of g differs from the b fraction");

    {
        std::mt19937_64 rng(0x94a7c1355d21ULL);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        bool ok = true;
        std::string w;
        int found = 0;
        for (int attempt = 0; ok && found < 20 && attempt < 500; ++attempt) {
            QVec x(static_cast<std::size_t>(n));
            bool degenerate = false;
            for (auto& c : x) {
                int nv = num(rng);
                if (nv == 0) {
                    degenerate = true;
                    break;
                }
                c = Rat(nv, den(rng));
                c.canonicalize();
            }
            if (degenerate) continue;
            try {
                if (lhs_f.eval_q(x) != rhs_f.eval_q(x) || lhs_g.eval_q(x) != rhs_g.eval_q(x)) {
                    ok = false;
                    w = "mismatch at a sampled point";
                }
                ++found;
            } catch (const Error&) {
                // pole at the sample, draw another point
            }
        }
        if (ok && found < 20) {
            ok = false;
            w = "could not sample twenty pole-free points";
        }
        row("the identities hold at random rational points", ok, w);
    }

    return out;
}

QP6Params qp6_default_params() {
    // Fourth powers of simple ratios, arranged so that |q| stays close to
    // one and a hundred steps remain within double range.
    QP6Params p;
    const int xs[6][2] = {{2, 3}, {3, 2}, {5, 7}, {7, 5}, {13, 11}, {12, 13}};
    for (const auto& x : xs) p.a.push_back(rat_pow(Rat(x[0], x[1]), 4));
    p.f0 = Rat(17, 19);
    p.g0 = Rat(19, 23);
    return p;
}

QP6Trajectory qp6_orbit(const QP6Context& ctx, const QP6Params& params, int steps,
                        bool c1_first) {
    if (params.a.size() != 6)
        fail("NonGenericParameters", "expected six multiplicative parameters");
    std::vector<Rat> x(8);
    for (int i = 0; i < 6; ++i) {
        auto root = exact_fourth_root(params.a[std::size_t(i)]);
        if (!root)
            fail("NonGenericParameters", "parameter a" + std::to_string(i) +
                                             " is not a positive fourth power of a rational");
        x[std::size_t(i)] = *root;
    }
    if (params.f0 == 0 || params.g0 == 0)
        fail("NonGenericParameters", "the starting point must lie on the torus");
    x[6] = params.f0;
    x[7] = params.g0;

    auto to_d = [](const std::vector<Rat>& v) {
        std::vector<double> d(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) d[j] = v[j].get_d();
        return d;
    };

    QP6Trajectory traj;
    std::vector<double> xd = to_d(x);
    traj.points.push_back({x, xd});
    for (int s = 0; s < steps; ++s) {
        const ClusterWord& w = ((s % 2 == 0) == c1_first) ? ctx.c1 : ctx.c2;
        x = word_eval_q(w, std::move(x));
        xd = word_eval_d(w, std::move(xd));
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double exact = x[j].get_d();
            const double scale = std::abs(exact) > 0 ? std::abs(exact) : 1.0;
            traj.max_rel_err = std::max(traj.max_rel_err, std::abs(xd[j] - exact) / scale);
        }
        traj.points.push_back({x, xd});
    }
    return traj;
}

QP6State qp6_state(const QP6Context& ctx, const std::vector<Rat>& x) {
    if (x.size() != std::size_t(ctx.seed.rank()))
        fail("NonGenericParameters", "expected eight torus coordinates");
    QP6State st;
    st.a.reserve(6);
    for (int i = 0; i < 6; ++i) st.a.push_back(rat_pow(x[std::size_t(i)], 4));
    st.f = x[6];
    st.g = x[7];
    st.q = 1;
    for (std::size_t j = 0; j < x.size(); ++j) st.q *= rat_pow(x[j], to_ll(ctx.q[j]));
    return st;
}

}  // namespace qpc
