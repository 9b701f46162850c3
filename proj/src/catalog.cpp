#include "qpcluster/catalog.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpcluster/xmap.hpp"

namespace qpc {

namespace {

Int zi(long long v) { return Int(static_cast<long>(v)); }

ZVec zrow(std::initializer_list<long long> xs) {
    ZVec v;
    v.reserve(xs.size());
    for (long long x : xs) v.push_back(zi(x));
    return v;
}

ZVec expo_to_zvec(const Expo& e) {
    ZVec v;
    v.reserve(e.size());
    for (long long x : e) v.push_back(zi(x));
    return v;
}

std::vector<int> swaps(int n, std::initializer_list<std::pair<int, int>> ts) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (const auto& t : ts) std::swap(p[t.first], p[t.second]);
    return p;
}

WordStep mu(int k, int sign) { return MutStep{k, sign}; }

WordStep perm_iso(std::vector<int> p, int sign) {
    return IsoStep{std::move(p), sign, std::nullopt};
}

WordStep matrix_iso(std::vector<int> p, int sign, ZMat m) {
    return IsoStep{std::move(p), sign, std::move(m)};
}

ZMat from_cols(std::initializer_list<std::initializer_list<long long>> cs) {
    int n = int(cs.size());
    ZMat m(n, n);
    int j = 0;
    for (const auto& c : cs) {
        int i = 0;
        for (long long x : c) m.at(i++, j) = zi(x);
        ++j;
    }
    return m;
}

// mutations at ks, the given isomorphism, then the mutations undone
std::vector<WordStep> conjugated(const std::vector<int>& ks, WordStep middle) {
    std::vector<WordStep> w;
    for (int k : ks) w.push_back(mu(k, 1));
    w.push_back(std::move(middle));
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) w.push_back(mu(*it, -1));
    return w;
}

std::vector<WordStep> conjugated_swap(const std::vector<int>& ks, int a, int b, int n) {
    return conjugated(ks, perm_iso(swaps(n, {{a, b}}), 1));
}

ZMat gram_matrix(int r, std::initializer_list<long long> norms,
                 std::initializer_list<std::initializer_list<long long>> edges) {
    ZMat g(r, r);
    int i = 0;
    for (long long d : norms) g.at(i, i) = zi(d), ++i;
    for (const auto& e : edges) {
        auto it = e.begin();
        int a = int(*it++);
        int b = int(*it++);
        long long w = *it;
        g.at(a, b) = zi(w);
        g.at(b, a) = zi(w);
    }
    return g;
}

CatalogGenerator reflection_gen(const Seed& s, std::string name, int root,
                                std::vector<WordStep> steps) {
    CatalogGenerator g;
    g.name = std::move(name);
    g.word = ClusterWord{s, std::move(steps)};
    g.reflection = true;
    g.root = root;
    return g;
}

CatalogGenerator auto_gen(const Seed& s, std::string name, std::vector<WordStep> steps,
                          int sign, std::vector<int> perm, std::vector<int> shift = {}) {
    CatalogGenerator g;
    g.name = std::move(name);
    g.word = ClusterWord{s, std::move(steps)};
    g.sign = sign;
    g.perm = std::move(perm);
    g.shift = std::move(shift);
    return g;
}

ClusterWord word_pow(const ClusterWord& w, int k) {
    ClusterWord r = w;
    for (int i = 1; i < k; ++i) r = compose_word(r, w);
    return r;
}

const CatalogGenerator& gen(const CatalogEntry& e, const std::string& name) {
    for (const auto& g : e.generators)
        if (g.name == name) return g;
    fail("UnknownLabel", "no generator named " + name);
}

std::vector<const CatalogGenerator*> reflections_by_root(const CatalogEntry& e) {
    std::vector<const CatalogGenerator*> refl(e.roots.size(), nullptr);
    for (const auto& g : e.generators)
        if (g.reflection) refl[g.root] = &g;
    return refl;
}

// squares of the reflections, then braid or commutation relations read off
// the Gram pairing; a pairing of two or more gives an infinite dihedral pair
// with nothing finite to check
void add_weyl_relations(CatalogEntry& e) {
    auto refl = reflections_by_root(e);
    for (const auto* g : refl) {
        if (!g) continue;
        e.relations.push_back({g->name + "^2", word_pow(g->word, 2)});
    }
    for (size_t i = 0; i < refl.size(); ++i) {
        if (!refl[i]) continue;
        for (size_t j = i + 1; j < refl.size(); ++j) {
            if (!refl[j]) continue;
            const Int& w = e.gram.at(int(i), int(j));
            int order;
            if (w == 0)
                order = 2;
            else if (w == 1)
                order = 3;
            else
                continue;
            e.relations.push_back(
                {"(" + refl[i]->name + " " + refl[j]->name + ")^" + std::to_string(order),
                 word_pow(compose_word(refl[i]->word, refl[j]->word), order)});
        }
    }
}

void add_order(CatalogEntry& e, const CatalogGenerator& g, int k) {
    e.relations.push_back({g.name + "^" + std::to_string(k), word_pow(g.word, k)});
}

void add_pair_order(CatalogEntry& e, const CatalogGenerator& a, const CatalogGenerator& b,
                    int k) {
    e.relations.push_back({"(" + a.name + " " + b.name + ")^" + std::to_string(k),
                           word_pow(compose_word(a.word, b.word), k)});
}

// a s_i a^{-1} = s_{perm[i]}, the target root read off the action table;
// the reflection along -alpha is the reflection along alpha
void add_conjugations(CatalogEntry& e, const CatalogGenerator& a) {
    auto refl = reflections_by_root(e);
    for (size_t i = 0; i < refl.size(); ++i) {
        if (!refl[i]) continue;
        const CatalogGenerator* t = refl[a.perm[i]];
        ClusterWord w = compose_word(
            compose_word(compose_word(a.word, refl[i]->word), invert_word(a.word)),
            invert_word(t->word));
        e.relations.push_back(
            {a.name + " " + refl[i]->name + " " + a.name + "^-1 = " + t->name, std::move(w)});
    }
}

CatalogEntry base_entry(std::string label, std::vector<Vec2> vecs) {
    CatalogEntry e;
    e.label = std::move(label);
    e.data = ToricData{std::move(vecs), 1};
    e.seed = seed_from_vectors(e.data);
    return e;
}

CatalogEntry make_e8() {
    CatalogEntry e = base_entry("E8(1)", {{0, 1},
                                          {0, 1},
                                          {0, 1},
                                          {0, 1},
                                          {0, 1},
                                          {0, 1},
                                          {-1, 0},
                                          {0, -1},
                                          {0, -1},
                                          {0, -1},
                                          {1, 0}});
    e.roots = {
        zrow({0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}),
        zrow({0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}),
        zrow({0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0}),
        zrow({0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}),
        zrow({-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        zrow({1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
        zrow({0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0}),
        zrow({0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0}),
        zrow({0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}),
    };
    e.delta = zrow({1, 1, 1, 1, 1, 1, 3, 2, 2, 2, 3});
    e.delta_decomps = {{1, 2, 3, 4, 5, 6, 4, 2, 3}};
    e.gram = gram_matrix(9, {-2, -2, -2, -2, -2, -2, -2, -2, -2},
                         {{0, 1, 1},
                          {1, 2, 1},
                          {2, 3, 1},
                          {3, 4, 1},
                          {4, 5, 1},
                          {5, 6, 1},
                          {6, 7, 1},
                          {5, 8, 1}});
    const Seed& s = e.seed;
    const int n = 11;
    e.generators = {
        reflection_gen(s, "s0", 0, {perm_iso(swaps(n, {{4, 5}}), 1)}),
        reflection_gen(s, "s1", 1, {perm_iso(swaps(n, {{3, 4}}), 1)}),
        reflection_gen(s, "s2", 2, {perm_iso(swaps(n, {{2, 3}}), 1)}),
        reflection_gen(s, "s3", 3, {perm_iso(swaps(n, {{1, 2}}), 1)}),
        reflection_gen(s, "s4", 4, {perm_iso(swaps(n, {{0, 1}}), 1)}),
        reflection_gen(s, "s5", 5, conjugated_swap({0}, 0, 7, n)),
        reflection_gen(s, "s6", 6, {perm_iso(swaps(n, {{7, 8}}), 1)}),
        reflection_gen(s, "s7", 7, {perm_iso(swaps(n, {{8, 9}}), 1)}),
        reflection_gen(s, "s8", 8, conjugated_swap({6}, 6, 10, n)),
    };
    add_weyl_relations(e);
    return e;
}

CatalogEntry make_e7() {
    CatalogEntry e = base_entry(
        "E7(1)",
        {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {-1, 0}, {0, -1}, {0, -1}, {1, 0}, {1, 0}, {1, 0}});
    e.roots = {
        zrow({0, 0, -1, 1, 0, 0, 0, 0, 0, 0}),
        zrow({0, -1, 1, 0, 0, 0, 0, 0, 0, 0}),
        zrow({-1, 1, 0, 0, 0, 0, 0, 0, 0, 0}),
        zrow({1, 0, 0, 0, 0, 1, 0, 0, 0, 0}),
        zrow({0, 0, 0, 0, 1, 0, 0, 1, 0, 0}),
        zrow({0, 0, 0, 0, 0, 0, 0, -1, 1, 0}),
        zrow({0, 0, 0, 0, 0, 0, 0, 0, -1, 1}),
        zrow({0, 0, 0, 0, 0, -1, 1, 0, 0, 0}),
    };
    e.delta = zrow({1, 1, 1, 1, 3, 2, 2, 1, 1, 1});
    e.delta_decomps = {{1, 2, 3, 4, 3, 2, 1, 2}};
    e.gram = gram_matrix(
        8, {-2, -2, -2, -2, -2, -2, -2, -2},
        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {3, 7, 1}});
    const Seed& s = e.seed;
    const int n = 10;
    e.generators = {
        reflection_gen(s, "s0", 0, {perm_iso(swaps(n, {{2, 3}}), 1)}),
        reflection_gen(s, "s1", 1, {perm_iso(swaps(n, {{1, 2}}), 1)}),
        reflection_gen(s, "s2", 2, {perm_iso(swaps(n, {{0, 1}}), 1)}),
        reflection_gen(s, "s3", 3, conjugated_swap({0}, 0, 5, n)),
        reflection_gen(s, "s4", 4, conjugated_swap({4}, 4, 7, n)),
        reflection_gen(s, "s5", 5, {perm_iso(swaps(n, {{7, 8}}), 1)}),
        reflection_gen(s, "s6", 6, {perm_iso(swaps(n, {{8, 9}}), 1)}),
        reflection_gen(s, "s7", 7, {perm_iso(swaps(n, {{5, 6}}), 1)}),
        auto_gen(s, "iota",
                 conjugated({4}, perm_iso(swaps(n, {{0, 4}, {1, 7}, {2, 8}, {3, 9}}), -1)), -1,
                 {6, 5, 4, 3, 2, 1, 0, 7}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota"), 2);
    add_conjugations(e, gen(e, "iota"));
    return e;
}

CatalogEntry make_e6() {
    CatalogEntry e = base_entry(
        "E6(1)", {{0, 1}, {0, 1}, {0, 1}, {-1, 0}, {0, -1}, {0, -1}, {0, -1}, {1, 0}, {1, 0}});
    e.roots = {
        zrow({0, 0, 0, 0, 0, 0, 0, -1, 1}),
        zrow({0, -1, 1, 0, 0, 0, 0, 0, 0}),
        zrow({-1, 1, 0, 0, 0, 0, 0, 0, 0}),
        zrow({1, 0, 0, 0, 1, 0, 0, 0, 0}),
        zrow({0, 0, 0, 0, -1, 1, 0, 0, 0}),
        zrow({0, 0, 0, 0, 0, -1, 1, 0, 0}),
        zrow({0, 0, 0, 1, 0, 0, 0, 1, 0}),
    };
    e.delta = zrow({1, 1, 1, 2, 1, 1, 1, 1, 1});
    e.delta_decomps = {{1, 1, 2, 3, 2, 1, 2}};
    e.gram = gram_matrix(7, {-2, -2, -2, -2, -2, -2, -2},
                         {{0, 6, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {3, 6, 1}});
    const Seed& s = e.seed;
    const int n = 9;
    e.generators = {
        reflection_gen(s, "s0", 0, {perm_iso(swaps(n, {{7, 8}}), 1)}),
        reflection_gen(s, "s1", 1, {perm_iso(swaps(n, {{1, 2}}), 1)}),
        reflection_gen(s, "s2", 2, {perm_iso(swaps(n, {{0, 1}}), 1)}),
        reflection_gen(s, "s3", 3, conjugated_swap({0}, 0, 4, n)),
        reflection_gen(s, "s4", 4, {perm_iso(swaps(n, {{4, 5}}), 1)}),
        reflection_gen(s, "s5", 5, {perm_iso(swaps(n, {{5, 6}}), 1)}),
        reflection_gen(s, "s6", 6, conjugated_swap({3}, 3, 7, n)),
        auto_gen(s, "iota1", {perm_iso(swaps(n, {{0, 4}, {1, 5}, {2, 6}}), -1)}, -1,
                 {0, 5, 4, 3, 2, 1, 6}),
        auto_gen(s, "iota2", conjugated({3}, perm_iso(swaps(n, {{0, 3}, {1, 7}, {2, 8}}), -1)),
                 -1, {1, 0, 6, 3, 4, 5, 2}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota1"), 2);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota1"), gen(e, "iota2"), 3);
    add_conjugations(e, gen(e, "iota1"));
    add_conjugations(e, gen(e, "iota2"));
    return e;
}

CatalogEntry make_e5() {
    CatalogEntry e = base_entry(
        "E5(1)", {{0, 1}, {0, 1}, {-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {1, 0}, {1, 0}});
    e.roots = {
        zrow({-1, 1, 0, 0, 0, 0, 0, 0}),
        zrow({0, 0, 0, 0, -1, 1, 0, 0}),
        zrow({1, 0, 0, 0, 1, 0, 0, 0}),
        zrow({0, 0, 1, 0, 0, 0, 1, 0}),
        zrow({0, 0, -1, 1, 0, 0, 0, 0}),
        zrow({0, 0, 0, 0, 0, 0, -1, 1}),
    };
    e.delta = zrow({1, 1, 1, 1, 1, 1, 1, 1});
    e.delta_decomps = {{1, 1, 2, 2, 1, 1}};
    e.gram = gram_matrix(6, {-2, -2, -2, -2, -2, -2},
                         {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}});
    const Seed& s = e.seed;
    const int n = 8;
    e.generators = {
        reflection_gen(s, "s0", 0, {perm_iso(swaps(n, {{0, 1}}), 1)}),
        reflection_gen(s, "s1", 1, {perm_iso(swaps(n, {{4, 5}}), 1)}),
        reflection_gen(s, "s2", 2, conjugated_swap({0}, 0, 4, n)),
        reflection_gen(s, "s3", 3, conjugated_swap({2}, 2, 6, n)),
        reflection_gen(s, "s4", 4, {perm_iso(swaps(n, {{2, 3}}), 1)}),
        reflection_gen(s, "s5", 5, {perm_iso(swaps(n, {{6, 7}}), 1)}),
        auto_gen(s, "iota1", {perm_iso(swaps(n, {{0, 4}, {1, 5}}), -1)}, -1, {1, 0, 2, 3, 4, 5}),
        auto_gen(s, "iota2", {perm_iso(swaps(n, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}), -1)}, -1,
                 {4, 5, 3, 2, 0, 1}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota1"), 2);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota1"), gen(e, "iota2"), 4);
    add_conjugations(e, gen(e, "iota1"));
    add_conjugations(e, gen(e, "iota2"));
    return e;
}

CatalogEntry make_e4() {
    CatalogEntry e =
        base_entry("E4(1)", {{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {0, -1}, {1, 0}, {1, 0}});
    e.roots = {
        zrow({0, 1, 0, 1, 0, 1, 0}),
        zrow({0, 0, 0, -1, 1, 0, 0}),
        zrow({1, 0, 0, 1, 0, 0, 0}),
        zrow({0, 0, 1, 0, 0, 1, 0}),
        zrow({0, 0, 0, 0, 0, -1, 1}),
    };
    e.delta = zrow({1, 1, 1, 1, 1, 1, 1});
    e.delta_decomps = {{1, 1, 1, 1, 1}};
    e.gram = gram_matrix(5, {-2, -2, -2, -2, -2},
                         {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
    const Seed& s = e.seed;
    const int n = 7;
    e.generators = {
        reflection_gen(s, "s0", 0, conjugated_swap({1, 3}, 3, 5, n)),
        reflection_gen(s, "s1", 1, {perm_iso(swaps(n, {{3, 4}}), 1)}),
        reflection_gen(s, "s2", 2, conjugated_swap({0}, 0, 3, n)),
        reflection_gen(s, "s3", 3, conjugated_swap({2}, 2, 5, n)),
        reflection_gen(s, "s4", 4, {perm_iso(swaps(n, {{5, 6}}), 1)}),
        auto_gen(s, "iota1",
                 {mu(3, 1), matrix_iso({6, 0, 1, 5, 2, 3, 4}, 1,
                                       from_cols({{0, 0, 0, 0, 0, 0, 1},
                                                  {1, 0, 0, 0, 0, 1, 0},
                                                  {0, 1, 0, 0, 0, 1, 0},
                                                  {0, 0, 0, 0, 0, -1, 0},
                                                  {0, 0, 1, 0, 0, 0, 0},
                                                  {0, 0, 0, 1, 0, 0, 0},
                                                  {0, 0, 0, 0, 1, 0, 0}}))},
                 1, {3, 4, 0, 1, 2}),
        auto_gen(s, "iota2", {perm_iso(swaps(n, {{0, 2}, {3, 5}, {4, 6}}), -1)}, -1,
                 {0, 4, 3, 2, 1}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota1"), 5);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota2"), gen(e, "iota1"), 2);
    add_conjugations(e, gen(e, "iota1"));
    add_conjugations(e, gen(e, "iota2"));
    return e;
}

CatalogEntry make_e3() {
    CatalogEntry e =
        base_entry("E3(1)", {{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}});
    e.roots = {
        zrow({1, 0, 0, 1, 0, 0}),
        zrow({0, 1, 0, 0, 1, 0}),
        zrow({0, 0, 1, 0, 0, 1}),
        zrow({1, 0, 1, 0, 1, 0}),
        zrow({0, 1, 0, 1, 0, 1}),
    };
    e.delta = zrow({1, 1, 1, 1, 1, 1});
    e.delta_decomps = {{1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}};
    e.gram = gram_matrix(5, {-2, -2, -2, -2, -2},
                         {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 2}});
    const Seed& s = e.seed;
    const int n = 6;
    e.generators = {
        reflection_gen(s, "s0", 0, conjugated_swap({0}, 0, 3, n)),
        reflection_gen(s, "s1", 1, conjugated_swap({1}, 1, 4, n)),
        reflection_gen(s, "s2", 2, conjugated_swap({2}, 2, 5, n)),
        reflection_gen(s, "s3", 3, conjugated_swap({0, 2}, 2, 4, n)),
        reflection_gen(s, "s4", 4, conjugated_swap({1, 3}, 3, 5, n)),
        auto_gen(s, "iota1", {perm_iso({1, 2, 3, 4, 5, 0}, 1)}, 1, {2, 0, 1, 4, 3}),
        auto_gen(s, "iota2", {perm_iso(swaps(n, {{0, 3}, {1, 2}, {4, 5}}), -1)}, -1,
                 {0, 2, 1, 4, 3}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota1"), 6);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota2"), gen(e, "iota1"), 2);
    add_conjugations(e, gen(e, "iota1"));
    add_conjugations(e, gen(e, "iota2"));
    return e;
}

CatalogEntry make_e2() {
    CatalogEntry e = base_entry("E2(1)", {{-1, 2}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}});
    e.roots = {
        zrow({1, 0, 1, 1, 0}),
        zrow({0, 1, 0, 0, 1}),
        zrow({1, 0, 3, -1, 2}),
        zrow({0, 1, -2, 2, -1}),
    };
    e.delta = zrow({1, 1, 1, 1, 1});
    e.delta_decomps = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    e.gram = gram_matrix(4, {-2, -2, -14, -14}, {{0, 1, 2}, {2, 3, 14}});
    const Seed& s = e.seed;
    const int n = 5;
    ZMat sigma = from_cols({{0, 0, 0, 1, 1},
                            {1, 0, 0, 1, 0},
                            {0, 0, 0, -1, 0},
                            {0, 1, 0, 0, 0},
                            {0, 0, 1, 0, 0}});
    std::vector<WordStep> tau_steps = {mu(2, 1), matrix_iso({4, 0, 3, 1, 2}, 1, sigma)};
    std::vector<WordStep> iota_steps = tau_steps;
    iota_steps.push_back(perm_iso(swaps(n, {{1, 4}, {2, 3}}), -1));
    e.generators = {
        reflection_gen(s, "s0", 0, conjugated_swap({0, 2}, 2, 3, n)),
        reflection_gen(s, "s1", 1, conjugated_swap({1}, 1, 4, n)),
        auto_gen(s, "tau", tau_steps, 1, {1, 0, 2, 3}, {0, 0, 1, -1}),
        auto_gen(s, "iota", iota_steps, -1, {1, 0, 3, 2}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota"), 2);
    e.untested = {
        "tau has infinite order; only its torus action is pinned",
        "tau s0 tau^-1 = s1 is checked on the kernel torus only",
        "tau s1 tau^-1 = s0 is checked on the kernel torus only",
        "iota s0 iota^-1 = s1 is checked on the kernel torus only",
        "iota s1 iota^-1 = s0 is checked on the kernel torus only",
        "(iota tau)^2 is checked on the kernel torus only",
    };
    return e;
}

CatalogEntry make_e1() {
    CatalogEntry e = base_entry("E1(1)", {{-1, 2}, {-1, -1}, {1, -1}, {1, 0}});
    e.roots = {
        zrow({1, 0, 2, -1}),
        zrow({0, 1, -1, 2}),
    };
    e.delta = zrow({1, 1, 1, 1});
    e.delta_decomps = {{1, 1}};
    e.gram = gram_matrix(2, {-8, -8}, {{0, 1, 8}});
    const Seed& s = e.seed;
    ZMat sigma = from_cols({{0, 0, 1, 0}, {1, 0, 0, 2}, {0, 0, 0, -1}, {0, 1, 0, 0}});
    e.generators = {
        auto_gen(s, "tau", {mu(2, 1), matrix_iso({2, 0, 3, 1}, 1, sigma)}, 1, {0, 1}, {1, -1}),
        auto_gen(s, "iota", {perm_iso(swaps(4, {{0, 1}, {2, 3}}), -1)}, -1, {1, 0}),
    };
    add_order(e, gen(e, "iota"), 2);
    e.untested = {
        "tau has infinite order; only its torus action is pinned",
        "(iota tau)^2 is checked on the kernel torus only",
    };
    return e;
}

CatalogEntry make_e1p() {
    CatalogEntry e = base_entry("E1(1)'", {{-1, 2}, {-1, 0}, {1, -2}, {1, 0}});
    e.roots = {
        zrow({1, 0, 1, 0}),
        zrow({0, 1, 0, 1}),
    };
    e.delta = zrow({1, 1, 1, 1});
    e.delta_decomps = {{1, 1}};
    e.gram = gram_matrix(2, {-2, -2}, {{0, 1, 2}});
    const Seed& s = e.seed;
    const int n = 4;
    e.generators = {
        reflection_gen(s, "s0", 0, conjugated_swap({0}, 0, 2, n)),
        reflection_gen(s, "s1", 1, conjugated_swap({1}, 1, 3, n)),
        auto_gen(s, "iota1", {perm_iso({1, 2, 3, 0}, 1)}, 1, {1, 0}),
        auto_gen(s, "iota2", {perm_iso(swaps(n, {{0, 2}}), -1)}, -1, {0, 1}),
    };
    add_weyl_relations(e);
    add_order(e, gen(e, "iota1"), 4);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota2"), gen(e, "iota1"), 2);
    e.untested = {
        "iota1 s0 iota1^-1 = s1 is not among the stated relations",
        "iota1 s1 iota1^-1 = s0 is not among the stated relations",
        "iota2 s0 iota2^-1 = s0 is not among the stated relations",
        "iota2 s1 iota2^-1 = s1 is not among the stated relations",
    };
    return e;
}

CatalogEntry make_e0() {
    CatalogEntry e = base_entry("E0(1)", {{-1, 2}, {-1, -1}, {2, -1}});
    e.roots = {zrow({1, 1, 1})};
    e.delta = zrow({1, 1, 1});
    e.delta_decomps = {{1}};
    e.gram = gram_matrix(1, {0}, {});
    const Seed& s = e.seed;
    e.generators = {
        auto_gen(s, "iota1", {perm_iso({1, 2, 0}, 1)}, 1, {0}),
        auto_gen(s, "iota2", {perm_iso(swaps(3, {{0, 1}}), -1)}, -1, {0}),
    };
    add_order(e, gen(e, "iota1"), 3);
    add_order(e, gen(e, "iota2"), 2);
    add_pair_order(e, gen(e, "iota2"), gen(e, "iota1"), 2);
    return e;
}

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> entries = [] {
        std::map<std::string, CatalogEntry> m;
        for (auto&& e : {make_e8(), make_e7(), make_e6(), make_e5(), make_e4(), make_e3(),
                         make_e2(), make_e1(), make_e1p(), make_e0()})
            m.emplace(e.label, std::move(e));
        return m;
    }();
    return entries;
}

std::vector<ZVec> expected_images(const CatalogEntry& e, const CatalogGenerator& g) {
    std::vector<ZVec> out;
    int r = int(e.roots.size());
    for (int j = 0; j < r; ++j) {
        ZVec v;
        if (g.reflection) {
            v = vec_add(e.roots[j], vec_scale(e.roots[g.root], e.gram.at(g.root, j)));
        } else {
            v = vec_scale(e.roots[g.perm[j]], zi(g.sign));
            if (!g.shift.empty() && g.shift[j] != 0)
                v = vec_add(v, vec_scale(e.delta, zi(g.shift[j])));
        }
        out.push_back(std::move(v));
    }
    return out;
}

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) fail("ExponentOverflow", "exponent does not fit a machine word");
    return v.get_si();
}

ZVec pullback_exponent(const std::vector<FactoredFn>& images, const ZVec& expo,
                       const char* what) {
    int n = int(images.size());
    FactoredFn f(n);
    for (int j = 0; j < n; ++j) {
        long long e = to_ll(expo[j]);
        if (e != 0) f.mul_inplace(images[j], e);
    }
    auto mono = f.as_unit_monomial();
    if (!mono)
        fail("NotMonomial", std::string("the pullback of ") + what + " is not a unit monomial");
    return expo_to_zvec(*mono);
}

}  // namespace

const std::vector<std::string>& catalog_labels() {
    static const std::vector<std::string> labels = {"E8(1)", "E7(1)", "E6(1)", "E5(1)",
                                                    "E4(1)", "E3(1)", "E2(1)", "E1(1)",
                                                    "E1(1)'", "E0(1)"};
    return labels;
}

const CatalogEntry& catalog_entry(const std::string& label) {
    const auto& m = catalog();
    auto it = m.find(label);
    if (it == m.end()) fail("UnknownLabel", "no dataset labelled " + label);
    return it->second;
}

TorusAction action_on_TK(const CatalogEntry& entry, const ClusterWord& word) {
    if (!word.source.fd || !(*word.source.fd == *entry.seed.fd))
        fail("InvalidWord", "the word is not over the fixed data of " + entry.label);
    if (!(word_target(word) == word.source))
        fail("NotAutomorphism", "the word does not return to its source seed");

    std::vector<FactoredFn> images = word_images(word);
    ZMat basis = k_circ_basis(entry.data);
    int r = basis.cols();

    ZMat image(basis.rows(), r);
    for (int c = 0; c < r; ++c)
        image.set_col(c, pullback_exponent(images, basis.col(c), "a kernel character"));

    QMat bq = basis.to_q();
    QMat x(r, r);
    for (int c = 0; c < r; ++c) {
        auto sol = bq.solve(to_qvec(image.col(c)));
        if (!sol) fail("NotAutomorphism", "the induced map leaves the kernel lattice");
        x.set_col(c, *sol);
    }
    if (!x.is_integral())
        fail("NotAutomorphism", "the induced map is not integral on the kernel lattice");
    if (!x.to_z().is_unimodular())
        fail("NotAutomorphism", "the induced map on the kernel lattice is not unimodular");

    TorusAction action;
    ZVec dimg = pullback_exponent(images, entry.delta, "the null root character");
    if (dimg == entry.delta)
        action.sign = 1;
    else if (dimg == vec_neg(entry.delta))
        action.sign = -1;
    else
        fail("NotAutomorphism", "the null root is not preserved up to sign");

    for (const ZVec& a : entry.roots)
        action.root_images.push_back(pullback_exponent(images, a, "a root character"));
    return action;
}

std::vector<CheckResult> verify_root_basis(const CatalogEntry& entry) {
    std::vector<CheckResult> out;
    const auto& vecs = entry.data.vectors;
    int n = int(vecs.size());

    auto in_kernel = [&](const ZVec& a) {
        Int sx(0), sy(0);
        for (int i = 0; i < n; ++i) {
            sx += a[i] * zi(vecs[i][0]);
            sy += a[i] * zi(vecs[i][1]);
        }
        return sx == 0 && sy == 0;
    };

    {
        CheckResult r{"roots in kernel lattice", true, ""};
        for (size_t i = 0; i < entry.roots.size(); ++i) {
            if (in_kernel(entry.roots[i])) continue;
            r.passed = false;
            r.witness = "alpha_" + std::to_string(i) + " does not annihilate the vectors";
            break;
        }
        out.push_back(std::move(r));
    }

    BoundaryData bd = boundary_data(entry.data, smooth_complete_fan(entry.data));

    {
        CheckResult r{"gram matrix", true, ""};
        int m = int(entry.roots.size());
        for (int i = 0; i < m && r.passed; ++i)
            for (int j = i; j < m; ++j) {
                if (k_pair(entry.data, bd, entry.roots[i], entry.roots[j]) ==
                    entry.gram.at(i, j))
                    continue;
                r.passed = false;
                r.witness = "pairing <alpha_" + std::to_string(i) + ", alpha_" +
                            std::to_string(j) + "> differs";
                break;
            }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"delta decompositions", true, ""};
        for (size_t d = 0; d < entry.delta_decomps.size(); ++d) {
            ZVec sum(entry.delta.size(), Int(0));
            for (size_t j = 0; j < entry.delta_decomps[d].size(); ++j)
                sum = vec_add(sum, vec_scale(entry.roots[j], zi(entry.delta_decomps[d][j])));
            if (sum == entry.delta) continue;
            r.passed = false;
            r.witness = "decomposition " + std::to_string(d) + " does not sum to delta";
            break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"null root", true, ""};
        NullRoot nr = null_root(entry.data, bd);
        if (!(nr.delta == entry.delta)) {
            r.passed = false;
            r.witness = "computed null root differs from the stated delta";
        } else if (!in_kernel(nr.delta)) {
            r.passed = false;
            r.witness = "null root does not annihilate the vectors";
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"classification", true, ""};
        std::string got = classify_type(entry.data);
        if (got != entry.label) {
            r.passed = false;
            r.witness = "classified as " + got;
        }
        out.push_back(std::move(r));
    }

    return out;
}

bool verify_relation(const CatalogEntry& entry, const ClusterWord& word,
                     const SimplifyOptions& opts) {
    if (!word.source.fd || !(*word.source.fd == *entry.seed.fd))
        fail("InvalidWord", "the word is not over the fixed data of " + entry.label);
    return is_trivial_word(word, opts);
}

std::vector<CheckResult> verify_actions(const CatalogEntry& entry) {
    std::vector<CheckResult> out;
    std::vector<TorusAction> acts(entry.generators.size());
    std::vector<bool> ok(entry.generators.size(), false);

    for (size_t gi = 0; gi < entry.generators.size(); ++gi) {
        const CatalogGenerator& g = entry.generators[gi];
        CheckResult r{"action of " + g.name, false, ""};
        try {
            acts[gi] = action_on_TK(entry, g.word);
            ok[gi] = true;
            int want_sign = g.reflection ? 1 : g.sign;
            auto want = expected_images(entry, g);
            if (acts[gi].sign != want_sign) {
                r.witness = "sign differs";
            } else {
                for (size_t j = 0; j < want.size(); ++j) {
                    if (acts[gi].root_images[j] == want[j]) continue;
                    r.witness = "image of alpha_" + std::to_string(j) + " differs";
                    break;
                }
            }
            r.passed = r.witness.empty();
        } catch (const Error& err) {
            r.witness = err.code() + ": " + err.what();
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"injectivity witness", true, ""};
        for (size_t a = 0; a < entry.generators.size() && r.passed; ++a) {
            if (!entry.generators[a].reflection || !ok[a]) continue;
            for (size_t b = a + 1; b < entry.generators.size(); ++b) {
                if (!entry.generators[b].reflection || !ok[b]) continue;
                if (acts[a].root_images != acts[b].root_images) continue;
                r.passed = false;
                r.witness = entry.generators[a].name + " and " + entry.generators[b].name +
                            " induce the same map";
                break;
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"sign multiplicativity", true, ""};
        try {
            for (size_t gi = 0; gi + 1 < entry.generators.size(); ++gi) {
                if (!ok[gi] || !ok[gi + 1]) continue;
                ClusterWord w =
                    compose_word(entry.generators[gi].word, entry.generators[gi + 1].word);
                if (action_on_TK(entry, w).sign == acts[gi].sign * acts[gi + 1].sign) continue;
                r.passed = false;
                r.witness = "product " + entry.generators[gi].name + " " +
                            entry.generators[gi + 1].name + " breaks multiplicativity";
                break;
            }
        } catch (const Error& err) {
            r.passed = false;
            r.witness = err.code() + std::string(": ") + err.what();
        }
        out.push_back(std::move(r));
    }

    for (size_t gi = 0; gi < entry.generators.size(); ++gi) {
        if (!entry.generators[gi].reflection || !ok[gi]) continue;
        CheckResult r{"conjugation invariance", false, ""};
        try {
            ClusterWord m{entry.seed, {MutStep{0, 1}}};
            ClusterWord w = compose_word(
                compose_word(invert_word(m), entry.generators[gi].word), m);
            TorusAction t = action_on_TK(entry, w);
            if (t.sign != acts[gi].sign)
                r.witness = "sign changes under conjugation";
            else if (t.root_images != acts[gi].root_images)
                r.witness = "induced map changes under conjugation";
            r.passed = r.witness.empty();
        } catch (const Error& err) {
            r.witness = err.code() + std::string(": ") + err.what();
        }
        out.push_back(std::move(r));
        break;
    }

    return out;
}

}  // namespace qpc
