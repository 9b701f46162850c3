#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "qpcluster/qp6.hpp"

using namespace qpc;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

ZVec zrow(std::initializer_list<long long> vals) {
    ZVec r;
    for (long long v : vals) r.push_back(Int(static_cast<long>(v)));
    return r;
}

const QP6Context& ctx() {
    static const QP6Context c = build_qp6_context();
    return c;
}

} // namespace

TEST_SUITE("qp6") {

TEST_CASE("the context is anchored to the catalog") {
    const QP6Context& c = ctx();
    CHECK(c.entry.label == "E5(1)");
    REQUIRE(c.seed.rank() == 8);
    CHECK(c.seed.fd->has_finer_lattice);
    CHECK(!c.entry.seed.fd->has_finer_lattice);
    CHECK(c.seed.fd->lambda == c.entry.seed.fd->lambda);

    // one iota step, two plain swaps, two conjugated reflections per word
    CHECK(c.c1.steps.size() == 13);
    CHECK(c.c2.steps.size() == 13);
    CHECK(word_target(c.c1) == c.seed);
    CHECK(word_target(c.c2) == c.seed);

    REQUIRE(c.a.size() == 6);
    REQUIRE(c.b.size() == 8);
    CHECK(c.q == zrow({4, 4, 8, 8, 4, 4, 0, 0}));
    CHECK(c.f == zrow({0, 0, 0, 0, 0, 0, 1, 0}));
    CHECK(c.g == zrow({0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("the leading automorphism of c1 is iota2 iota1 iota2") {
    const QP6Context& c = ctx();
    ClusterWord iota3{c.seed, {c.c1.steps.front()}};

    auto steps_of = [&](const char* name) {
        for (const auto& g : c.entry.generators)
            if (g.name == name) return g.word.steps;
        FAIL("no generator named ", name);
        return std::vector<WordStep>{};
    };
    ClusterWord composite{c.seed, {}};
    for (const char* name : {"iota2", "iota1", "iota2"}) {
        auto steps = steps_of(name);
        composite.steps.insert(composite.steps.end(), steps.begin(), steps.end());
    }
    CHECK(words_equal(iota3, composite));
}

TEST_CASE("the verification report is clean") {
    auto rows = verify_qp6_identities(ctx());
    REQUIRE(rows.size() == 12);
    for (const auto& r : rows) {
        INFO(r.check, ": ", r.witness);
        CHECK(r.passed);
    }
}

TEST_CASE("the symbolic maps match the factored walk") {
    const QP6Context& c = ctx();
    auto [m1, m2] = qp6_maps(c);
    REQUIRE(m1.images.size() == 8);
    REQUIRE(m2.images.size() == 8);
    CHECK(m1.target == c.seed);
    CHECK(m2.target == c.seed);

    auto factored1 = word_images(c.c1);
    auto factored2 = word_images(c.c2);
    for (int j = 0; j < 8; ++j) {
        CHECK(ratfn_equal(m1.images[size_t(j)], factored1[size_t(j)].expand()));
        CHECK(ratfn_equal(m2.images[size_t(j)], factored2[size_t(j)].expand()));
    }
}

TEST_CASE("the three evaluation pipelines agree step by step") {
    const QP6Context& c = ctx();
    auto [m1, m2] = qp6_maps(c);
    auto traj = qp6_orbit(c, qp6_default_params(), 6);
    REQUIRE(traj.points.size() == 7);
    for (int s = 0; s < 6; ++s) {
        const XMap& m = s % 2 == 0 ? m2 : m1;  // default order applies c2 first
        CHECK(xmap_eval_q(m, traj.points[size_t(s)].x) == traj.points[size_t(s) + 1].x);
    }
    CHECK(traj.max_rel_err <= 1e-9);
}

TEST_CASE("parameters move as printed along the orbit") {
    const QP6Context& c = ctx();
    auto traj = qp6_orbit(c, qp6_default_params(), 4);
    std::vector<QP6State> st;
    for (const auto& p : traj.points) st.push_back(qp6_state(c, p.x));

    CHECK(st[0].a == qp6_default_params().a);
    CHECK(st[0].f == qp6_default_params().f0);
    CHECK(st[0].g == qp6_default_params().g0);

    // q alternates with its inverse; a3 moves only under c2, a2 only under
    // c1, and the remaining four parameters stay put.
    CHECK(st[1].q == 1 / st[0].q);
    CHECK(st[2].q == st[0].q);
    CHECK(st[1].a[3] == st[0].a[3] / st[0].q);
    CHECK(st[1].a[2] == st[0].a[2]);
    CHECK(st[2].a[2] == st[1].a[2] / st[1].q);
    CHECK(st[2].a[3] == st[1].a[3]);
    for (int i : {0, 1, 4, 5}) {
        CHECK(st[4].a[size_t(i)] == st[0].a[size_t(i)]);
    }

    auto flipped = qp6_orbit(c, qp6_default_params(), 1, true);
    QP6State f1 = qp6_state(c, flipped.points[1].x);
    CHECK(f1.a[2] == st[0].a[2] / st[0].q);
    CHECK(f1.a[3] == st[0].a[3]);
}

TEST_CASE("a hundred steps stay within the float tolerance") {
    auto traj = qp6_orbit(ctx(), qp6_default_params(), 100);
    REQUIRE(traj.points.size() == 101);
    CHECK(traj.max_rel_err <= 1e-9);
}

TEST_CASE("degenerate inputs are rejected") {
    const QP6Context& c = ctx();

    auto p = qp6_default_params();
    p.a[0] = 2;  // not a fourth power
    CHECK(code_of([&] { qp6_orbit(c, p, 1); }) == "NonGenericParameters");

    p = qp6_default_params();
    p.a[1] = -p.a[1];
    CHECK(code_of([&] { qp6_orbit(c, p, 1); }) == "NonGenericParameters");

    p = qp6_default_params();
    p.f0 = 0;
    CHECK(code_of([&] { qp6_orbit(c, p, 1); }) == "NonGenericParameters");

    p = qp6_default_params();
    p.a.pop_back();
    CHECK(code_of([&] { qp6_orbit(c, p, 1); }) == "NonGenericParameters");

    // f = -b1 annihilates a denominator of the g image under c2
    QP6Params pole;
    pole.a = {Rat(16), Rat(1), Rat(81), Rat(1), Rat(1), Rat(1)};
    pole.f0 = Rat(-2, 9);
    pole.g0 = 5;
    CHECK(code_of([&] { qp6_orbit(c, pole, 1); }) == "PoleAtPoint");

    CHECK(code_of([&] { qp6_state(c, std::vector<Rat>(3, Rat(1))); }) ==
          "NonGenericParameters");
}

} // TEST_SUITE
