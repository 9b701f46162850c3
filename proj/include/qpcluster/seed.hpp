#pragma once

// Fixed data, seeds, signed mutations, signed seed isomorphisms and words.
//
// A seed is a basis of the lattice N°, stored as a unimodular integer matrix
// whose columns are the basis vectors in the coordinates of the initial
// basis.  The skew form is a rational matrix on those same coordinates.  An
// optional finer lattice N ⊇ N° carries the characters; its basis is the
// coordinate system for every exponent vector in the symbolic layer.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "qpcluster/linalg.hpp"

namespace qpc {

struct FixedData {
    std::vector<int> labels;  // one per index, all distinct
    QMat lambda;              // skew form on the initial basis of N°
    QMat n_basis;             // columns: basis of N in initial coordinates
    QMat n_basis_inv;
    bool has_finer_lattice = false;

    int rank() const { return lambda.rows(); }
    bool operator==(const FixedData& o) const {
        return labels == o.labels && lambda == o.lambda && n_basis == o.n_basis;
    }
};

using FixedDataPtr = std::shared_ptr<const FixedData>;

// Validates skewness, integrality of the form on N°, and (when a finer
// lattice is given) N° ⊆ N together with {N, N°} ⊆ ℤ.
FixedDataPtr new_fixed_data(QMat lambda, std::optional<QMat> n_basis = std::nullopt,
                            std::vector<int> labels = {});

int position_of(const FixedData& fd, int label);  // UnknownLabel

struct Seed {
    FixedDataPtr fd;
    ZMat basis;  // unimodular; column i is e_i in initial coordinates

    int rank() const { return basis.cols(); }
    bool operator==(const Seed& o) const {
        return basis == o.basis && (fd == o.fd || (fd && o.fd && *fd == *o.fd));
    }
};

Seed initial_seed(FixedDataPtr fd);

// ε_ij = {e_i, e_j} on the seed basis; exact, and always integral.
ZMat exchange_matrix(const Seed& s);

// Signed mutation at basis position k: e′_k = −e_k, e′_i = e_i + [ε·ε_ik]₊ e_k.
Seed mutate_seed(const Seed& s, int k, int sign);

struct SeedIso {
    Seed source, target;
    std::vector<int> perm;  // basis position i of source ↦ perm[i] of target
    int sign = 1;
    ZMat matrix;            // σ♭ in initial coordinates

    std::vector<int> inverse_perm() const;
};

// Without a matrix the map is e_i ↦ e_{σ(i)} on the seed's own basis and the
// target is the seed itself; with a matrix the target seed is computed from
// σ♭(e_i) = e′_{σ(i)}.  Validation: σ♭ unimodular, form respected up to the
// sign, and the finer lattice preserved.
SeedIso make_isomorphism(const Seed& s, const std::vector<int>& perm, int sign,
                         const std::optional<ZMat>& matrix = std::nullopt);

SeedIso compose_iso(const SeedIso& outer, const SeedIso& inner);  // NotComposable
SeedIso invert_iso(const SeedIso& iso);

// The lattice automorphism t_k^ε = μ_k^ε ∘ μ_k^ε of a double signed mutation:
// e_i ↦ e_i + ε·ε_ik e_k, identity permutation, plus sign.
SeedIso t_iso(const Seed& base, int k, int sign);

// Words

struct MutStep {
    int k;  // basis position
    int sign;
    bool operator==(const MutStep&) const = default;
};

struct IsoStep {
    std::vector<int> perm;  // basis positions
    int sign;
    std::optional<ZMat> matrix;
    bool operator==(const IsoStep&) const = default;
};

using WordStep = std::variant<MutStep, IsoStep>;

struct ClusterWord {
    Seed source;
    std::vector<WordStep> steps;
};

Seed apply_step(const Seed& s, const WordStep& st);
Seed word_target(const ClusterWord& w);

// Concatenation first ∘ then: `first` is applied before `second`.
ClusterWord compose_word(const ClusterWord& first, const ClusterWord& second);
ClusterWord invert_word(const ClusterWord& w);

// Equivalent word consisting of μ⁺ mutations followed by exactly one signed
// isomorphism step (always present, possibly the identity).
ClusterWord normalize_word(const ClusterWord& w);

} // namespace qpc
