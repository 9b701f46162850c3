#pragma once

// The ten reference datasets: plane vectors, root bases in the kernel
// lattice, the embedded Cremona generators as cluster words, their expected
// actions on the kernel torus, and the relation lists derived from the
// printed group structure.  Everything here is verification surface; the
// verify operations re-derive each claim with the exact engines.

#include <string>
#include <vector>

#include "qpcluster/ratfun.hpp"
#include "qpcluster/seed.hpp"
#include "qpcluster/toric.hpp"

namespace qpc {

// A named generator word together with its action on the characters
// z^{alpha_i}.  Reflections act by s_i(a) = a + <alpha_i, a> alpha_i and
// carry the index of their root; the diagram automorphisms and translations
// send z^{alpha_i} to z^{sign * alpha_{perm[i]} + shift[i] * delta}.
struct CatalogGenerator {
    std::string name;
    ClusterWord word;
    bool reflection = false;
    int root = -1;
    int sign = 1;
    std::vector<int> perm;
    std::vector<int> shift;  // empty means no delta translations
};

struct CatalogRelation {
    std::string name;
    ClusterWord word;  // expected trivial
};

struct CatalogEntry {
    std::string label;
    ToricData data;
    Seed seed;
    std::vector<ZVec> roots;  // alpha_i in the coordinates of the base seed
    ZVec delta;
    std::vector<std::vector<long long>> delta_decomps;  // coefficients over the roots
    ZMat gram;                                          // pairings <alpha_i, alpha_j>
    std::vector<CatalogGenerator> generators;
    std::vector<CatalogRelation> relations;
    std::vector<std::string> untested;  // known structure we deliberately do not verify
};

const std::vector<std::string>& catalog_labels();
const CatalogEntry& catalog_entry(const std::string& label);  // UnknownLabel

// Monomial action induced on the kernel torus by an automorphism word over
// the entry's fixed data.  The sign is read off the image of z^{delta}.
struct TorusAction {
    int sign = 1;
    std::vector<ZVec> root_images;
};

TorusAction action_on_TK(const CatalogEntry& entry, const ClusterWord& word);

struct CheckResult {
    std::string check;
    bool passed = false;
    std::string witness;  // empty when passed
};

// Roots inside the kernel lattice, Gram matrix against the printed diagram,
// delta decompositions, the null root, and the type classification.
std::vector<CheckResult> verify_root_basis(const CatalogEntry& entry);

// True when the word is a trivial cluster transformation.
bool verify_relation(const CatalogEntry& entry, const ClusterWord& word,
                     const SimplifyOptions& opts = {});

// Every generator action against its printed table, reflections against the
// Gram formula, plus injectivity, sign multiplicativity and invariance of
// the induced action under conjugation by a mutation.
std::vector<CheckResult> verify_actions(const CatalogEntry& entry);

}  // namespace qpc
