#include "qpcluster/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qpcluster/error.hpp"

namespace qpc {

long long wedge(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

bool is_primitive(const Vec2& v) {
    if (v[0] == 0 && v[1] == 0) return false;
    return std::gcd(v[0], v[1]) == 1;
}

namespace {

Int zint(long long v) { return Int(static_cast<long>(v)); }

int half_of(const Vec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

} // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return wedge(a, b) > 0;
}

namespace {

// x, y with a x + b y = gcd(a, b)
void egcd(long long a, long long b, long long& x, long long& y) {
    x = 1;
    y = 0;
    long long x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        a -= q * b;
        std::swap(a, b);
        x -= q * x1;
        std::swap(x, x1);
        y -= q * y1;
        std::swap(y, y1);
    }
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// rays strictly between u and v making every determinant 1, hull-minimal
void resolve_sector(const Vec2& u, const Vec2& v, std::vector<Vec2>& out) {
    long long d = wedge(u, v);
    if (d <= 0) fail("NotPositivelySpanning", "sector spans half a turn or more");
    if (d == 1) return;
    long long x, y;
    egcd(u[0], u[1], x, y);
    Vec2 p{-y, x};
    if (wedge(u, p) != 1) {  // egcd may land on -1 for negative inputs
        p[0] = -p[0];
        p[1] = -p[1];
    }
    // slide along u until p enters the sector as far out as possible
    long long t = -floor_div(wedge(p, v) - 1, d);
    p[0] += t * u[0];
    p[1] += t * u[1];
    out.push_back(p);
    resolve_sector(p, v, out);
}

int ray_index(const Fan2D& fan, const Vec2& w) {
    for (size_t j = 0; j < fan.rays.size(); ++j)
        if (fan.rays[j] == w) return int(j);
    return -1;
}

// intersection matrix of the boundary divisors: diagonal n'_j, cyclically
// adjacent entries 1
QMat divisor_matrix(const BoundaryData& bd) {
    int s = int(bd.fan.rays.size());
    QMat t(s, s);
    for (int j = 0; j < s; ++j) {
        t.at(j, j) = zint(bd.self_int[j]);
        t.at(j, (j + 1) % s) = 1;
        t.at((j + 1) % s, j) = 1;
    }
    return t;
}

QVec ray_totals(const BoundaryData& bd, const ZVec& a) {
    QVec t(bd.fan.rays.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) t[bd.ray_of[i]] += Rat(a[i]);
    return t;
}

} // namespace

void validate_toric(const ToricData& d) {
    if (d.orientation != 1 && d.orientation != -1)
        fail("NotPrimitive", "orientation must be +1 or -1");
    for (const Vec2& w : d.vectors)
        if (!is_primitive(w))
            fail("NotPrimitive", "every vector must be nonzero with coprime entries");
    for (size_t i = 1; i < d.vectors.size(); ++i)
        if (wedge(d.vectors[0], d.vectors[i]) != 0) return;
    fail("RankDeficient", "vectors lie on a single line");
}

Seed seed_from_vectors(const ToricData& d) {
    validate_toric(d);
    int r = int(d.vectors.size());
    QMat lam(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            lam.at(i, j) = Int(d.orientation) * zint(wedge(d.vectors[i], d.vectors[j]));
    return initial_seed(new_fixed_data(lam));
}

Fan2D smooth_complete_fan(const ToricData& d) {
    validate_toric(d);
    std::set<Vec2> distinct(d.vectors.begin(), d.vectors.end());
    std::vector<Vec2> rays(distinct.begin(), distinct.end());
    std::sort(rays.begin(), rays.end(), angle_less);
    auto first = std::find(rays.begin(), rays.end(), d.vectors[0]);
    std::rotate(rays.begin(), first, rays.end());

    for (size_t j = 0; j < rays.size(); ++j)
        if (wedge(rays[j], rays[(j + 1) % rays.size()]) <= 0)
            fail("NotPositivelySpanning", "rays leave a gap of half a turn or more");

    Fan2D fan;
    for (size_t j = 0; j < rays.size(); ++j) {
        fan.rays.push_back(rays[j]);
        resolve_sector(rays[j], rays[(j + 1) % rays.size()], fan.rays);
    }
    return fan;
}

Fan2D star_subdivide(const Fan2D& f) {
    Fan2D out;
    size_t s = f.rays.size();
    for (size_t j = 0; j < s; ++j) {
        const Vec2& u = f.rays[j];
        const Vec2& v = f.rays[(j + 1) % s];
        out.rays.push_back(u);
        out.rays.push_back(Vec2{u[0] + v[0], u[1] + v[1]});
    }
    return out;
}

BoundaryData boundary_data(const ToricData& d, const Fan2D& fan) {
    validate_toric(d);
    int s = int(fan.rays.size());
    if (s < 3) fail("InconsistentFan", "a smooth complete fan needs at least 3 rays");
    int descents = 0;
    for (int j = 0; j < s; ++j) {
        const Vec2& u = fan.rays[j];
        const Vec2& v = fan.rays[(j + 1) % s];
        if (!is_primitive(u)) fail("InconsistentFan", "ray is not primitive");
        if (wedge(u, v) != 1) fail("InconsistentFan", "fan is not smooth and complete");
        if (!angle_less(u, v)) ++descents;
    }
    if (descents != 1) fail("InconsistentFan", "rays do not wind around once");

    BoundaryData bd;
    bd.fan = fan;
    bd.self_int.resize(s);
    bd.mult.assign(s, 0);
    for (int j = 0; j < s; ++j) {
        const Vec2& prev = fan.rays[(j + s - 1) % s];
        const Vec2& cur = fan.rays[j];
        const Vec2& next = fan.rays[(j + 1) % s];
        Vec2 sum{prev[0] + next[0], prev[1] + next[1]};
        long long n;
        if (cur[0] != 0) {
            if (sum[0] % cur[0] != 0) fail("InconsistentFan", "broken ray relation");
            n = -sum[0] / cur[0];
        } else {
            if (sum[1] % cur[1] != 0) fail("InconsistentFan", "broken ray relation");
            n = -sum[1] / cur[1];
        }
        if (sum[0] != -n * cur[0] || sum[1] != -n * cur[1])
            fail("InconsistentFan", "broken ray relation");
        bd.self_int[j] = n;
    }
    for (const Vec2& w : d.vectors) {
        int j = ray_index(fan, w);
        if (j < 0) fail("InconsistentFan", "input vector is not a ray of the fan");
        bd.ray_of.push_back(j);
        ++bd.mult[j];
    }

    bd.h = QMat(s, s);
    for (int j = 0; j < s; ++j) {
        bd.h.at(j, j) = zint(bd.self_int[j] - bd.mult[j]);
        bd.h.at(j, (j + 1) % s) = 1;
        bd.h.at((j + 1) % s, j) = 1;
    }
    return bd;
}

QpVerdict qp_type_check(const QMat& h) {
    if (h.rows() != h.cols()) fail("NotSymmetric", "matrix must be square");
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i + 1; j < h.cols(); ++j)
            if (h.at(i, j) != h.at(j, i)) fail("NotSymmetric", "matrix must be symmetric");
    PsdStatus psd = psd_status(h * Rat(-1));
    if (!psd.semidefinite) return QpVerdict::Indefinite;
    return psd.rank < h.rows() ? QpVerdict::QPainleve : QpVerdict::NegativeDefinite;
}

NullRoot null_root(const ToricData& d, const BoundaryData& bd) {
    if (qp_type_check(bd.h) != QpVerdict::QPainleve)
        fail("NotQPainleveType", "boundary matrix is not negative semidefinite "
                                 "with nontrivial kernel");
    std::vector<QVec> kern = bd.h.kernel();
    if (kern.size() != 1)
        fail("NoPositiveKernelVector", "kernel of the boundary matrix is not a line");

    // clear denominators, force positivity, make the entries coprime
    QVec v = kern[0];
    Int lcm = 1;
    for (const Rat& x : v) lcm = lcm / gcd(lcm, x.get_den()) * x.get_den();
    ZVec cp;
    for (const Rat& x : v) cp.push_back(Rat(x * Rat(lcm)).get_num());
    Int g = vec_gcd(cp);
    if (g != 0)
        for (Int& x : cp) x /= g;
    int sign = cp[0] > 0 ? 1 : -1;
    for (Int& x : cp) {
        x *= sign;
        if (x <= 0) fail("NoPositiveKernelVector", "kernel vector changes sign");
    }

    NullRoot nr;
    nr.c_prime = cp;
    for (size_t i = 0; i < d.vectors.size(); ++i) nr.c.push_back(cp[bd.ray_of[i]]);
    nr.delta = nr.c;

    Int wx = 0, wy = 0;
    for (size_t i = 0; i < d.vectors.size(); ++i) {
        wx += nr.c[i] * zint(d.vectors[i][0]);
        wy += nr.c[i] * zint(d.vectors[i][1]);
    }
    if (wx != 0 || wy != 0)
        fail("InconsistentFan", "null root does not annihilate the vectors");
    return nr;
}

ZMat k_circ_basis(const ToricData& d) {
    validate_toric(d);
    int r = int(d.vectors.size());
    ZMat w(2, r);
    for (int i = 0; i < r; ++i) {
        w.at(0, i) = zint(d.vectors[i][0]);
        w.at(1, i) = zint(d.vectors[i][1]);
    }
    std::vector<ZVec> basis = z_kernel(w);
    ZMat out(r, int(basis.size()));
    for (int j = 0; j < int(basis.size()); ++j) out.set_col(j, basis[j]);
    return out;
}

Int k_pair(const ToricData& d, const BoundaryData& bd, const ZVec& a, const ZVec& b) {
    QMat t = divisor_matrix(bd);
    QVec ta = ray_totals(bd, a), tb = ray_totals(bd, b);
    for (const QVec& k : t.kernel())
        if (vec_dot(k, ta) != 0 || vec_dot(k, tb) != 0)
            fail("SingularSystem", "ray totals are not orthogonal to the kernel");
    auto x = t.solve(ta);
    if (!x) fail("SingularSystem", "no particular divisor solution");
    Rat val = vec_dot(*x, tb);
    for (size_t i = 0; i < a.size(); ++i) val -= Rat(a[i] * b[i]);
    if (val.get_den() != 1)
        fail("LatticeValidationFailed", "intersection pairing is not integral");
    return val.get_num();
}

KForm k_form(const ToricData& d, const BoundaryData& bd) {
    KForm kf;
    kf.basis = k_circ_basis(d);
    int m = kf.basis.cols();
    kf.gram = QMat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Int v = k_pair(d, bd, kf.basis.col(i), kf.basis.col(j));
            kf.gram.at(i, j) = v;
            kf.gram.at(j, i) = v;
        }
    return kf;
}

namespace {

// Lagrange-Gauss reduction of a 2x2 positive definite integer Gram matrix;
// returns the successive minima on the diagonal.
void gauss_reduce(Int& a, Int& b, Int& c) {
    // gram [[a, b], [b, c]]
    for (;;) {
        if (a > c) {
            std::swap(a, c);
            b = -b;
        }
        // t = nearest integer to b / a
        Int t;
        mpz_fdiv_q(t.get_mpz_t(), Int(2 * b + a).get_mpz_t(), Int(2 * a).get_mpz_t());
        if (t == 0) break;
        // second vector <- second - t * first
        c = c - 2 * t * b + t * t * a;
        b = b - t * a;
    }
    if (b < 0) b = -b;
}

// whether the reduced positive form a x^2 + 2b xy + c y^2 takes the value t;
// reduction keeps solutions inside a small box
bool represents(const Int& a, const Int& b, const Int& c, long t) {
    for (long x = -t; x <= t; ++x)
        for (long y = -t; y <= t; ++y)
            if (a * x * x + 2 * b * x * y + c * y * y == t) return true;
    return false;
}

} // namespace

std::string classify_type(const ToricData& d) {
    validate_toric(d);
    Fan2D fan;
    try {
        fan = smooth_complete_fan(d);
    } catch (const Error& e) {
        if (std::string(e.code()) == "NotPositivelySpanning")
            fail("NotQPainleveType", "vectors do not positively span the plane");
        throw;
    }
    BoundaryData bd = boundary_data(d, fan);
    NullRoot nr = null_root(d, bd);
    ZMat kb = k_circ_basis(d);
    int m = kb.cols();

    // δ in kernel-basis coordinates; primitive because gcd(c) = 1
    auto coords = kb.to_q().solve(to_qvec(nr.delta));
    if (!coords) fail("SingularSystem", "null root is outside the kernel lattice");
    auto zc = to_zvec(*coords);
    if (!zc) fail("LatticeValidationFailed", "null root has fractional coordinates");

    ZMat u = complete_to_unimodular(*zc);
    ZMat quot = kb * u;  // column 0 is δ; the rest represent K°/Zδ
    int q = m - 1;
    QMat gram(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            Int v = k_pair(d, bd, quot.col(i + 1), quot.col(j + 1));
            gram.at(i, j) = v;
            gram.at(j, i) = v;
        }
    PsdStatus psd = psd_status(gram * Rat(-1));
    if (!psd.semidefinite || psd.rank != q)
        fail("UnrecognizedInvariants", "quotient form is not negative definite");

    switch (q) {
    case 0:
        return "E0(1)";
    case 1: {
        Int norm = gram.at(0, 0).get_num();
        if (norm == -2) return "E1(1)'";
        if (norm == -8) return "E1(1)";
        break;
    }
    case 2: {
        Int a = -gram.at(0, 0).get_num();
        Int b = -gram.at(0, 1).get_num();
        Int c = -gram.at(1, 1).get_num();
        gauss_reduce(a, b, c);
        if (represents(a, b, c, 2) && represents(a, b, c, 14)) return "E2(1)";
        break;
    }
    default:
        if (q >= 3 && q <= 8) return "E" + std::to_string(q) + "(1)";
        break;
    }
    fail("UnrecognizedInvariants", "lattice invariants match none of the ten types");
}

} // namespace qpc
