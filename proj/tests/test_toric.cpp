#include <doctest.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qpcluster/toric.hpp"
#include "test_data.hpp"

using namespace qpc;

namespace {

ToricData td(std::vector<Vec2> v, int orientation = 1) {
    return ToricData{std::move(v), orientation};
}

ToricData data_of(const std::string& label) { return representative_data(label); }

ZVec zv(std::vector<int> v) {
    ZVec out;
    for (int x : v) out.push_back(x);
    return out;
}

ZMat zmat(std::initializer_list<std::initializer_list<int>> rows) {
    int r = int(rows.size());
    int c = r ? int(rows.begin()->size()) : 0;
    ZMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

QMat qm(std::initializer_list<std::initializer_list<int>> rows) {
    int r = int(rows.size());
    int c = r ? int(rows.begin()->size()) : 0;
    QMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

BoundaryData boundary_of(const ToricData& d) {
    return boundary_data(d, smooth_complete_fan(d));
}

bool in_kernel_span(const ToricData& d, const ZVec& a) {
    auto x = k_circ_basis(d).to_q().solve(to_qvec(a));
    return x && to_zvec(*x).has_value();
}

} // namespace

TEST_SUITE("toric") {

TEST_CASE("seeds from plane vectors") {
    Seed e0 = seed_from_vectors(data_of("E0"));
    CHECK(exchange_matrix(e0) == zmat({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}}));

    Seed tiny = seed_from_vectors(td({{1, 0}, {0, 1}}));
    CHECK(exchange_matrix(tiny) == zmat({{0, 1}, {-1, 0}}));
    Seed flipped = seed_from_vectors(td({{1, 0}, {0, 1}}, -1));
    CHECK(exchange_matrix(flipped) == zmat({{0, -1}, {1, 0}}));

    CHECK(code_of([&] { seed_from_vectors(td({{2, 0}, {0, 1}})); }) == "NotPrimitive");
    CHECK(code_of([&] { seed_from_vectors(td({{1, 0}, {-1, 0}})); }) == "RankDeficient");
    CHECK(code_of([&] { seed_from_vectors(td({{1, 0}, {0, 1}}, 2)); }) == "NotPrimitive");
}

TEST_CASE("canonical fans match the catalog") {
    std::vector<Vec2> square{{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    for (const char* label : {"E8", "E7", "E6", "E5"})
        CHECK(smooth_complete_fan(data_of(label)).rays == square);

    CHECK(smooth_complete_fan(data_of("E4")).rays ==
          std::vector<Vec2>{{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, 0}});
    CHECK(smooth_complete_fan(data_of("E3")).rays ==
          std::vector<Vec2>{{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}});
    CHECK(smooth_complete_fan(data_of("E2")).rays ==
          std::vector<Vec2>{{-1, 2}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}});
    CHECK(smooth_complete_fan(data_of("E1")).rays ==
          std::vector<Vec2>{
              {-1, 2}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {0, 1}});
    CHECK(smooth_complete_fan(data_of("E1'")).rays ==
          std::vector<Vec2>{
              {-1, 2}, {-1, 1}, {-1, 0}, {0, -1}, {1, -2}, {1, -1}, {1, 0}, {0, 1}});
    CHECK(smooth_complete_fan(data_of("E0")).rays ==
          std::vector<Vec2>{{-1, 2}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
                            {2, -1}, {1, 0}, {0, 1}});

    CHECK(code_of([] { smooth_complete_fan(td({{1, 0}, {0, 1}})); }) ==
          "NotPositivelySpanning");
    CHECK(code_of([] { smooth_complete_fan(td({{1, 0}, {0, 1}, {1, 1}})); }) ==
          "NotPositivelySpanning");
}

TEST_CASE("boundary data on the projective plane") {
    ToricData d = td({{1, 0}, {0, 1}, {-1, -1}});
    BoundaryData bd = boundary_of(d);
    CHECK(bd.self_int == std::vector<long long>{1, 1, 1});
    CHECK(bd.mult == std::vector<long long>{1, 1, 1});
    // without the blowup correction every divisor entry is 1
    CHECK(bd.h == qm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(qp_type_check(bd.h) == QpVerdict::Indefinite);
}

TEST_CASE("boundary data on the square") {
    ToricData d = data_of("E5");
    BoundaryData bd = boundary_of(d);
    CHECK(bd.self_int == std::vector<long long>{0, 0, 0, 0});
    CHECK(bd.mult == std::vector<long long>{2, 2, 2, 2});
    CHECK(bd.h == qm({{-2, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, -2}}));

    Fan2D p2;
    p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
    CHECK(code_of([&] { boundary_data(d, p2); }) == "InconsistentFan");
    Fan2D coarse;
    coarse.rays = {{0, 1}, {-1, 0}, {0, -1}, {2, -1}};  // not smooth
    CHECK(code_of([&] { boundary_data(d, coarse); }) == "InconsistentFan");
}

TEST_CASE("semidefiniteness verdicts") {
    CHECK(qp_type_check(qm({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})) ==
          QpVerdict::QPainleve);
    CHECK(qp_type_check(qm({{-1, 0}, {0, -1}})) == QpVerdict::NegativeDefinite);
    CHECK(qp_type_check(qm({{1}})) == QpVerdict::Indefinite);
    CHECK(qp_type_check(qm({{0}})) == QpVerdict::QPainleve);
    CHECK(code_of([] { qp_type_check(qm({{0, 1}, {2, 0}})); }) == "NotSymmetric");

    // against a principal-minor oracle on small symmetric matrices
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 4;
        QMat h(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int v = entry(rng);
                h.at(i, j) = v;
                h.at(j, i) = v;
            }
        // minors of -H: negative semidefinite iff all are >= 0
        QMat neg = h * Rat(-1);
        bool nsd = true;
        int full = 0;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) idx.push_back(i);
            QMat sub(int(idx.size()), int(idx.size()));
            for (size_t i = 0; i < idx.size(); ++i)
                for (size_t j = 0; j < idx.size(); ++j)
                    sub.at(int(i), int(j)) = neg.at(idx[i], idx[j]);
            Rat det = sub.det();
            if (det < 0) nsd = false;
            if (int(idx.size()) == n && det > 0) full = 1;
        }
        QpVerdict want = !nsd             ? QpVerdict::Indefinite
                         : full           ? QpVerdict::NegativeDefinite
                                          : QpVerdict::QPainleve;
        CHECK(qp_type_check(h) == want);
    }
}

TEST_CASE("null roots of the catalog") {
    auto c_of = [](const std::string& label) {
        ToricData d = data_of(label);
        NullRoot nr = null_root(d, boundary_of(d));
        std::vector<int> out;
        for (const Int& x : nr.c) out.push_back(int(x.get_si()));
        return out;
    };
    CHECK(c_of("E8") == std::vector<int>{1, 1, 1, 1, 1, 1, 3, 2, 2, 2, 3});
    CHECK(c_of("E7") == std::vector<int>{1, 1, 1, 1, 3, 2, 2, 1, 1, 1});
    CHECK(c_of("E6") == std::vector<int>{1, 1, 1, 2, 1, 1, 1, 1, 1});
    for (const char* label : {"E5", "E4", "E3", "E2", "E1", "E1'", "E0"}) {
        ToricData d = data_of(label);
        NullRoot nr = null_root(d, boundary_of(d));
        for (const Int& x : nr.c) CHECK(x == 1);
        CHECK(nr.delta == nr.c);
    }

    ToricData p2 = td({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(code_of([&] { null_root(p2, boundary_of(p2)); }) == "NotQPainleveType");
}

TEST_CASE("kernel lattice of the vector map") {
    ToricData e5 = data_of("E5");
    ZMat kb = k_circ_basis(e5);
    CHECK(kb.cols() == 6);
    CHECK(in_kernel_span(e5, zv({1, 0, 0, 0, 1, 0, 0, 0})));  // e1 + e5

    CHECK(k_circ_basis(td({{1, 0}, {0, 1}})).cols() == 0);

    ToricData e7 = data_of("E7");
    CHECK(k_circ_basis(e7).cols() == 8);
    CHECK(in_kernel_span(e7, zv({1, 1, 1, 1, 3, 2, 2, 1, 1, 1})));
}

TEST_CASE("intersection pairing on the kernel") {
    ToricData e5 = data_of("E5");
    BoundaryData bd5 = boundary_of(e5);
    ZVec a0 = zv({-1, 1, 0, 0, 0, 0, 0, 0});
    CHECK(k_pair(e5, bd5, a0, a0) == -2);
    ZVec d5 = zv({1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(k_pair(e5, bd5, d5, d5) == 0);
    CHECK(k_pair(e5, bd5, a0, d5) == 0);

    ToricData e1 = data_of("E1");
    BoundaryData bd1 = boundary_of(e1);
    ZVec r0 = zv({1, 0, 2, -1});
    CHECK(k_pair(e1, bd1, r0, r0) == -8);

    ToricData e2 = data_of("E2");
    BoundaryData bd2 = boundary_of(e2);
    CHECK(k_pair(e2, bd2, zv({1, 0, 1, 1, 0}), zv({1, 0, 1, 1, 0})) == -2);
    CHECK(k_pair(e2, bd2, zv({1, 0, 3, -1, 2}), zv({1, 0, 3, -1, 2})) == -14);
    CHECK(k_pair(e2, bd2, zv({1, 0, 1, 1, 0}), zv({0, 1, 0, 0, 1})) == 2);

    ToricData e3 = data_of("E3");
    BoundaryData bd3 = boundary_of(e3);
    CHECK(k_pair(e3, bd3, zv({1, 0, 1, 0, 1, 0}), zv({0, 1, 0, 1, 0, 1})) == 2);
    CHECK(k_pair(e3, bd3, zv({1, 0, 0, 1, 0, 0}), zv({0, 1, 0, 0, 1, 0})) == 1);

    // e1 alone is not in the kernel, so the pairing is undefined
    CHECK(code_of([&] {
              k_pair(e5, bd5, zv({1, 0, 0, 0, 0, 0, 0, 0}), d5);
          }) == "SingularSystem");

    KForm kf = k_form(e5, bd5);
    CHECK(kf.gram.rows() == 6);
    auto dc = kf.basis.to_q().solve(to_qvec(d5));
    REQUIRE(dc.has_value());
    for (int j = 0; j < 6; ++j) {
        Rat z = 0;
        for (int i = 0; i < 6; ++i) z += kf.gram.at(j, i) * (*dc)[i];
        CHECK(z == 0);  // δ spans the radical
    }
}

TEST_CASE("classification lands on all ten types") {
    CHECK(classify_type(data_of("E8")) == "E8(1)");
    CHECK(classify_type(data_of("E7")) == "E7(1)");
    CHECK(classify_type(data_of("E6")) == "E6(1)");
    CHECK(classify_type(data_of("E5")) == "E5(1)");
    CHECK(classify_type(data_of("E4")) == "E4(1)");
    CHECK(classify_type(data_of("E3")) == "E3(1)");
    CHECK(classify_type(data_of("E2")) == "E2(1)");
    CHECK(classify_type(data_of("E1")) == "E1(1)");
    CHECK(classify_type(data_of("E1'")) == "E1(1)'");
    CHECK(classify_type(data_of("E0")) == "E0(1)");

    CHECK(code_of([] { classify_type(td({{1, 0}, {0, 1}, {-1, -1}})); }) ==
          "NotQPainleveType");
    CHECK(code_of([] { classify_type(td({{1, 0}, {0, 1}})); }) == "NotQPainleveType");
    CHECK(code_of([] { classify_type(td({{1, 0}, {-1, 0}})); }) == "RankDeficient");
}

TEST_CASE("fan choice does not matter") {
    for (const char* label : {"E5", "E2", "E0"}) {
        ToricData d = data_of(label);
        Fan2D fine = smooth_complete_fan(d);
        Fan2D finer = star_subdivide(fine);
        BoundaryData bd1 = boundary_data(d, fine);
        BoundaryData bd2 = boundary_data(d, finer);

        NullRoot n1 = null_root(d, bd1);
        NullRoot n2 = null_root(d, bd2);
        CHECK(n1.c == n2.c);
        CHECK(n1.delta == n2.delta);
        size_t s = fine.rays.size();
        for (size_t j = 0; j < s; ++j) {
            CHECK(n2.c_prime[2 * j] == n1.c_prime[j]);
            CHECK(n2.c_prime[2 * j + 1] == n1.c_prime[j] + n1.c_prime[(j + 1) % s]);
        }

        CHECK(k_form(d, bd1).gram == k_form(d, bd2).gram);
    }
}

TEST_CASE("restarting the ray cycle elsewhere changes nothing essential") {
    // same vectors listed from a different starting point
    ToricData a = data_of("E0");
    ToricData b = td({{-1, -1}, {2, -1}, {-1, 2}});
    CHECK(classify_type(a) == classify_type(b));
    NullRoot na = null_root(a, boundary_of(a));
    NullRoot nb = null_root(b, boundary_of(b));
    CHECK(na.c == nb.c);
}

} // TEST_SUITE
