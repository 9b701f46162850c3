#include "qpcluster/seed.hpp"

#include <algorithm>

namespace qpc {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
    if (int(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) fail("InvalidWord", "sign must be +1 or -1");
}

} // namespace

FixedDataPtr new_fixed_data(QMat lambda, std::optional<QMat> n_basis,
                            std::vector<int> labels) {
    int n = lambda.rows();
    if (lambda.cols() != n) fail("NotSkewSymmetric", "form matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lambda.at(i, j) != -lambda.at(j, i))
                fail("NotSkewSymmetric", "form matrix is not skew-symmetric");
    if (!lambda.is_integral())
        fail("NonIntegralExchange", "form is not integral on the seed lattice");

    auto fd = std::make_shared<FixedData>();
    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
    }
    if (int(labels.size()) != n) fail("UnknownLabel", "label count differs from rank");
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("UnknownLabel", "labels must be distinct");
    }
    fd->labels = std::move(labels);
    fd->lambda = std::move(lambda);

    if (n_basis) {
        if (n_basis->rows() != n || n_basis->cols() != n)
            fail("BadSublattice", "finer-lattice basis must be square of matching rank");
        auto inv = n_basis->inverse();
        if (!inv) fail("BadSublattice", "finer-lattice basis is singular");
        // N° ⊆ N: every e_i integral in the N basis
        if (!inv->is_integral())
            fail("BadSublattice", "seed lattice is not contained in the finer lattice");
        // {N, N°} ⊆ ℤ
        QMat pairing = n_basis->transpose() * fd->lambda;
        if (!pairing.is_integral())
            fail("BadSublattice", "form does not pair the finer lattice integrally");
        fd->n_basis = std::move(*n_basis);
        fd->n_basis_inv = std::move(*inv);
        fd->has_finer_lattice = true;
    } else {
        fd->n_basis = QMat::identity(n);
        fd->n_basis_inv = QMat::identity(n);
    }
    return fd;
}

int position_of(const FixedData& fd, int label) {
    for (size_t i = 0; i < fd.labels.size(); ++i)
        if (fd.labels[i] == label) return int(i);
    fail("UnknownLabel", "no index with label " + std::to_string(label));
}

Seed initial_seed(FixedDataPtr fd) {
    int n = fd->rank();
    return Seed{std::move(fd), ZMat::identity(n)};
}

ZMat exchange_matrix(const Seed& s) {
    QMat b = s.basis.to_q();
    QMat eps = b.transpose() * s.fd->lambda * b;
    if (!eps.is_integral())
        fail("NonIntegralExchange", "exchange matrix is not integral");
    return eps.to_z();
}

Seed mutate_seed(const Seed& s, int k, int sign) {
    int n = s.rank();
    if (k < 0 || k >= n) fail("InvalidWord", "mutation index out of range");
    check_sign(sign);
    ZMat eps = exchange_matrix(s);
    ZMat t(n, n);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            t.at(k, k) = -1;
            continue;
        }
        t.at(i, i) = 1;
        Int c = sign * eps.at(i, k);
        if (c > 0) t.at(k, i) = c;
    }
    return Seed{s.fd, s.basis * t};
}

std::vector<int> SeedIso::inverse_perm() const {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = int(i);
    return inv;
}

namespace {

// shared validation for both construction modes
void validate_iso(const SeedIso& iso) {
    const FixedData& fd = *iso.source.fd;
    int n = fd.rank();
    QMat m = iso.matrix.to_q();
    QMat lhs = m.transpose() * fd.lambda * m;
    QMat rhs = fd.lambda * Rat(iso.sign);
    if (lhs != rhs) fail("FormNotRespected", "map does not scale the form by the sign");
    if (fd.has_finer_lattice) {
        QMat c = fd.n_basis_inv * m * fd.n_basis;
        if (!c.is_integral())
            fail("LatticeNotPreserved", "map does not preserve the finer lattice");
    }
    // seed-to-seed compatibility: σ♭(e_i) = e′_{σ(i)}
    for (int i = 0; i < n; ++i) {
        ZVec img = iso.matrix * iso.source.basis.col(i);
        if (img != iso.target.basis.col(iso.perm[i]))
            fail("FormNotRespected", "map does not send the source basis to the target basis");
    }
}

} // namespace

SeedIso make_isomorphism(const Seed& s, const std::vector<int>& perm, int sign,
                         const std::optional<ZMat>& matrix) {
    int n = s.rank();
    check_sign(sign);
    if (!is_permutation(perm, n)) fail("NotBijective", "not a permutation of the indices");

    SeedIso iso;
    iso.source = s;
    iso.perm = perm;
    iso.sign = sign;
    if (matrix) {
        if (matrix->rows() != n || matrix->cols() != n)
            fail("NotBijective", "matrix must be square of matching rank");
        if (!matrix->is_unimodular())
            fail("LatticeNotPreserved", "matrix is not a lattice automorphism");
        iso.matrix = *matrix;
        // the matrix and the permutation define the target basis
        ZMat tgt(n, n);
        for (int i = 0; i < n; ++i) tgt.set_col(perm[i], iso.matrix * s.basis.col(i));
        iso.target = Seed{s.fd, std::move(tgt)};
    } else {
        // e_i ↦ e_{σ(i)} on the seed's own basis; target = source
        ZMat p(n, n);
        for (int i = 0; i < n; ++i) p.at(perm[i], i) = 1;
        iso.matrix = s.basis * p * s.basis.unimodular_inverse();
        iso.target = s;
    }
    validate_iso(iso);
    return iso;
}

SeedIso compose_iso(const SeedIso& outer, const SeedIso& inner) {
    if (!(inner.target == outer.source))
        fail("NotComposable", "inner target differs from outer source");
    SeedIso iso;
    iso.source = inner.source;
    iso.target = outer.target;
    iso.perm.resize(inner.perm.size());
    for (size_t i = 0; i < inner.perm.size(); ++i) iso.perm[i] = outer.perm[inner.perm[i]];
    iso.sign = outer.sign * inner.sign;
    iso.matrix = outer.matrix * inner.matrix;
    validate_iso(iso);
    return iso;
}

SeedIso invert_iso(const SeedIso& iso) {
    SeedIso inv;
    inv.source = iso.target;
    inv.target = iso.source;
    inv.perm = iso.inverse_perm();
    inv.sign = iso.sign;
    inv.matrix = iso.matrix.unimodular_inverse();
    validate_iso(inv);
    return inv;
}

SeedIso t_iso(const Seed& base, int k, int sign) {
    int n = base.rank();
    if (k < 0 || k >= n) fail("InvalidWord", "index out of range");
    check_sign(sign);
    ZMat eps = exchange_matrix(base);
    ZMat t = ZMat::identity(n);
    for (int i = 0; i < n; ++i)
        if (i != k) t.at(k, i) = sign * eps.at(i, k);

    SeedIso iso;
    iso.source = base;
    iso.target = Seed{base.fd, base.basis * t};
    iso.perm.resize(n);
    for (int i = 0; i < n; ++i) iso.perm[i] = i;
    iso.sign = 1;
    iso.matrix = base.basis * t * base.basis.unimodular_inverse();
    validate_iso(iso);
    return iso;
}

Seed apply_step(const Seed& s, const WordStep& st) {
    if (const auto* m = std::get_if<MutStep>(&st)) return mutate_seed(s, m->k, m->sign);
    const auto& iso = std::get<IsoStep>(st);
    return make_isomorphism(s, iso.perm, iso.sign, iso.matrix).target;
}

Seed word_target(const ClusterWord& w) {
    Seed cur = w.source;
    for (const auto& st : w.steps) cur = apply_step(cur, st);
    return cur;
}

ClusterWord compose_word(const ClusterWord& first, const ClusterWord& second) {
    if (!(word_target(first) == second.source))
        fail("NotComposable", "first word does not end at the second word's source");
    ClusterWord w;
    w.source = first.source;
    w.steps = first.steps;
    w.steps.insert(w.steps.end(), second.steps.begin(), second.steps.end());
    return w;
}

ClusterWord invert_word(const ClusterWord& w) {
    ClusterWord inv;
    inv.source = word_target(w);
    Seed cur = w.source;
    // walk forward recording, per step, the inverse step anchored at its target
    std::vector<WordStep> rev;
    for (const auto& st : w.steps) {
        if (const auto* m = std::get_if<MutStep>(&st)) {
            rev.push_back(MutStep{m->k, -m->sign});
            cur = mutate_seed(cur, m->k, m->sign);
        } else {
            SeedIso iso = make_isomorphism(cur, std::get<IsoStep>(st).perm,
                                           std::get<IsoStep>(st).sign,
                                           std::get<IsoStep>(st).matrix);
            SeedIso back = invert_iso(iso);
            rev.push_back(IsoStep{back.perm, back.sign, back.matrix});
            cur = iso.target;
        }
    }
    inv.steps.assign(rev.rbegin(), rev.rend());
    return inv;
}

ClusterWord normalize_word(const ClusterWord& w) {
    // Invariant: (processed prefix) = acc ∘ (μ⁺ chain); acc is a signed
    // isomorphism from the chain's end seed.
    ClusterWord chain;
    chain.source = w.source;
    Seed chain_end = w.source;

    int n = w.source.rank();
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    SeedIso acc = make_isomorphism(w.source, id, 1);

    for (const auto& st : w.steps) {
        if (const auto* iso = std::get_if<IsoStep>(&st)) {
            SeedIso step = make_isomorphism(acc.target, iso->perm, iso->sign, iso->matrix);
            acc = compose_iso(step, acc);
            continue;
        }
        const auto& m = std::get<MutStep>(st);
        if (m.k < 0 || m.k >= n) fail("InvalidWord", "mutation index out of range");
        // μ_k^ε ∘ (εσ) = (εσ) ∘ μ_{σ⁻¹(k)}^{sign·ε}
        int j = acc.inverse_perm()[m.k];
        int eff = acc.sign * m.sign;

        chain.steps.push_back(MutStep{j, 1});
        Seed next_end = mutate_seed(chain_end, j, 1);
        SeedIso carried;
        carried.source = next_end;
        carried.target = mutate_seed(acc.target, m.k, m.sign);
        carried.perm = acc.perm;
        carried.sign = acc.sign;
        carried.matrix = acc.matrix;
        if (eff < 0) {
            // μ_j⁻ = t_j⁻ ∘ μ_j⁺ with t based at the μ_j⁺ target
            SeedIso shift = t_iso(next_end, j, -1);
            carried.source = shift.source;
            carried.matrix = carried.matrix * shift.matrix;
        }
        // re-anchoring is justified by the commutation relation; verify
        validate_iso(carried);
        acc = std::move(carried);
        chain_end = std::move(next_end);
    }

    ClusterWord out = chain;
    out.steps.push_back(IsoStep{acc.perm, acc.sign, acc.matrix});
    // defensive: the rewritten word must end where the original did
    if (!(word_target(out) == word_target(w)))
        fail("InvalidWord", "normalization changed the word target");
    return out;
}

} // namespace qpc
