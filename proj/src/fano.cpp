#include "qpcluster/fano.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qpcluster/error.hpp"

namespace qpc {

namespace {

Vec2 primitive_part(Vec2 v) {
    long long g = std::gcd(v[0], v[1]);
    if (g > 1) {
        v[0] /= g;
        v[1] /= g;
    }
    return v;
}

// both facet lines through a candidate vertex, solved exactly
Vec2 line_meet(const Vec2& wa, long long ca, const Vec2& wb, long long cb) {
    long long det = wedge(wa, wb);
    long long nx = -ca * wb[1] + cb * wa[1];
    long long ny = -wa[0] * cb + wb[0] * ca;
    if (nx % det != 0 || ny % det != 0)
        fail("NotLattice", "facet lines meet outside the lattice");
    return Vec2{nx / det, ny / det};
}

} // namespace

FanoPolygon polygon_from_facets(const std::vector<std::pair<Vec2, long long>>& halfplanes) {
    std::map<Vec2, long long> by_normal;
    for (const auto& [w, c] : halfplanes) {
        if (!is_primitive(w)) fail("NotPrimitive", "facet normal must be primitive");
        if (c <= 0) fail("InvalidPolygon", "the origin must be strictly interior");
        auto [it, fresh] = by_normal.emplace(w, c);
        if (!fresh && it->second != c)
            fail("InvalidPolygon", "conflicting facets share a normal");
    }
    if (by_normal.size() < 3) fail("Unbounded", "fewer than three facet directions");

    std::vector<std::pair<Vec2, long long>> fs(by_normal.begin(), by_normal.end());
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    auto first = std::find_if(fs.begin(), fs.end(), [&](const auto& f) {
        return f.first == halfplanes.front().first;
    });
    std::rotate(fs.begin(), first, fs.end());
    size_t s = fs.size();
    for (size_t j = 0; j < s; ++j)
        if (wedge(fs[j].first, fs[(j + 1) % s].first) <= 0)
            fail("Unbounded", "facet normals leave a gap of half a turn or more");

    FanoPolygon p;
    for (size_t j = 0; j < s; ++j) {
        const auto& [wa, ca] = fs[(j + s - 1) % s];
        const auto& [wb, cb] = fs[j];
        Vec2 v = line_meet(wa, ca, wb, cb);
        if (!is_primitive(v)) fail("NotPrimitiveVertex", "vertex is not primitive");
        p.vertices.push_back(v);
    }
    for (size_t j = 0; j < s; ++j) {
        const Vec2& v = p.vertices[j];
        for (const auto& [w, c] : fs)
            if (v[0] * w[0] + v[1] * w[1] < -c)
                fail("InconsistentFan", "a facet cuts into the polygon");
        Vec2 d{p.vertices[(j + 1) % s][0] - v[0], p.vertices[(j + 1) % s][1] - v[1]};
        if (d[0] == 0 && d[1] == 0)
            fail("InconsistentFan", "facet degenerates to a point");
        p.facets.push_back(Facet{fs[j].first, fs[j].second, std::gcd(d[0], d[1])});
    }
    return p;
}

FanoPolygon polygon_from_vertices(const std::vector<Vec2>& vertices) {
    size_t m = vertices.size();
    if (m < 3) fail("InvalidPolygon", "a polygon needs at least three vertices");

    long long area2 = 0;
    for (size_t j = 0; j < m; ++j) area2 += wedge(vertices[j], vertices[(j + 1) % m]);
    if (area2 == 0) fail("InvalidPolygon", "vertices are degenerate");
    std::vector<Vec2> vs = vertices;
    if (area2 < 0) std::reverse(vs.begin(), vs.end());

    FanoPolygon p;
    p.vertices = vs;
    for (size_t j = 0; j < m; ++j) {
        const Vec2& v = vs[j];
        const Vec2& v2 = vs[(j + 1) % m];
        if (!is_primitive(v)) fail("NotPrimitiveVertex", "vertex is not primitive");
        Vec2 d{v2[0] - v[0], v2[1] - v[1]};
        if (d[0] == 0 && d[1] == 0) fail("InvalidPolygon", "repeated vertex");
        const Vec2& v3 = vs[(j + 2) % m];
        Vec2 d2{v3[0] - v2[0], v3[1] - v2[1]};
        if (wedge(d, d2) <= 0) fail("InvalidPolygon", "vertices are not strictly convex");
        Vec2 w = primitive_part(Vec2{-d[1], d[0]});  // inner normal
        long long c = -(v[0] * w[0] + v[1] * w[1]);
        if (c <= 0) fail("InvalidPolygon", "the origin must be strictly interior");
        p.facets.push_back(Facet{w, c, std::gcd(d[0], d[1])});
    }
    return p;
}

FanoPolygon fano_polygon(const ToricData& d, const NullRoot& nr) {
    std::vector<std::pair<Vec2, long long>> hp;
    for (size_t i = 0; i < d.vectors.size(); ++i) {
        if (!nr.c[i].fits_slong_p())
            fail("InvalidPolygon", "null root entry out of machine range");
        hp.emplace_back(d.vectors[i], nr.c[i].get_si());
    }
    FanoPolygon p = polygon_from_facets(hp);

    // every supporting line carries as many lattice steps as the ray
    // multiplicity demands
    std::map<Vec2, long long> mult;
    for (const Vec2& w : d.vectors) ++mult[w];
    for (const Facet& f : p.facets)
        if (f.l != mult[f.w] * f.c)
            fail("InconsistentFan", "facet length does not match ray multiplicity");
    return p;
}

FanoPolygon fano_polygon(const ToricData& d) {
    BoundaryData bd = boundary_data(d, smooth_complete_fan(d));
    return fano_polygon(d, null_root(d, bd));
}

bool no_remainders(const FanoPolygon& p) {
    for (const Facet& f : p.facets)
        if (f.l % f.c != 0) return false;
    return true;
}

ToricData seed_from_polygon(const FanoPolygon& p) {
    if (!no_remainders(p))
        fail("HasRemainders", "some facet length is not a multiple of its height");
    ToricData d;
    d.orientation = 1;
    for (const Facet& f : p.facets)
        for (long long i = 0; i < f.l / f.c; ++i) d.vectors.push_back(f.w);
    return d;
}

bool same_polygon(const FanoPolygon& a, const FanoPolygon& b) {
    size_t m = a.vertices.size();
    if (m != b.vertices.size()) return false;
    for (size_t off = 0; off < m; ++off) {
        bool ok = true;
        for (size_t j = 0; j < m && ok; ++j)
            ok = a.vertices[j] == b.vertices[(j + off) % m];
        if (ok) return true;
    }
    return false;
}

std::string render_polygon(const FanoPolygon& p) {
    long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (const Vec2& v : p.vertices) {
        x0 = std::min(x0, v[0]);
        x1 = std::max(x1, v[0]);
        y0 = std::min(y0, v[1]);
        y1 = std::max(y1, v[1]);
    }
    auto side = [&](const Vec2& q, const Facet& f) {
        return q[0] * f.w[0] + q[1] * f.w[1] + f.c;  // >= 0 inside the halfplane
    };
    std::string out;
    for (long long y = y1; y >= y0; --y) {
        std::string row;
        for (long long x = x0; x <= x1; ++x) {
            Vec2 q{x, y};
            long long min_side = 0;
            bool inside = true;
            for (const Facet& f : p.facets) {
                long long sd = side(q, f);
                if (sd < 0) inside = false;
                min_side = (&f == &p.facets.front()) ? sd : std::min(min_side, sd);
            }
            char ch = ' ';
            if (inside) {
                bool vertex =
                    std::find(p.vertices.begin(), p.vertices.end(), q) != p.vertices.end();
                if (vertex)
                    ch = '*';
                else if (min_side == 0)
                    ch = '+';
                else
                    ch = (x == 0 && y == 0) ? 'o' : '.';
            }
            row += ch;
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

} // namespace qpc
