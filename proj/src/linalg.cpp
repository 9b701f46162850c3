#include "qpcluster/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace qpc {

// Vector helpers

Int vec_gcd(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

bool vec_is_zero(const ZVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

ZVec vec_neg(const ZVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

ZVec vec_add(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ZVec vec_sub(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ZVec vec_scale(const ZVec& v, const Int& c) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

Rat vec_dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec to_qvec(const ZVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::optional<ZVec> to_zvec(const QVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) return std::nullopt;
        r[i] = v[i].get_num();
    }
    return r;
}

// ZMat

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZVec ZMat::col(int j) const {
    ZVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void ZMat::set_col(int j, const ZVec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat ZMat::operator*(const ZMat& rhs) const {
    ZMat r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += a * rhs.at(k, j);
        }
    return r;
}

ZVec ZMat::operator*(const ZVec& v) const {
    ZVec r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

QMat ZMat::to_q() const {
    QMat q(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) q.at(i, j) = Rat(at(i, j));
    return q;
}

Int ZMat::det() const {
    Rat d = to_q().det();
    return d.get_num();  // determinant of an integer matrix is integral
}

bool ZMat::is_unimodular() const {
    if (rows_ != cols_) return false;
    Int d = det();
    return d == 1 || d == -1;
}

ZMat ZMat::unimodular_inverse() const {
    if (!is_unimodular()) fail("NotBijective", "matrix is not unimodular");
    return to_q().inverse()->to_z();
}

// QMat

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QVec QMat::col(int j) const {
    QVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void QMat::set_col(int j, const QVec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& rhs) const {
    QMat r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += a * rhs.at(k, j);
        }
    return r;
}

QVec QMat::operator*(const QVec& v) const {
    QVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
    return r;
}

QMat QMat::operator+(const QMat& rhs) const {
    QMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + rhs.at(i, j);
    return r;
}

QMat QMat::operator-(const QMat& rhs) const {
    QMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - rhs.at(i, j);
    return r;
}

bool QMat::is_integral() const {
    for (const Rat& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

ZMat QMat::to_z() const {
    if (!is_integral()) fail("NonIntegralExchange", "matrix has non-integral entries");
    ZMat z(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) z.at(i, j) = at(i, j).get_num();
    return z;
}

Rat QMat::det() const {
    if (rows_ != cols_) fail("NotBijective", "determinant of a non-square matrix");
    QMat a = *this;
    int n = rows_;
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rat inv = 1 / a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c) == 0) continue;
            Rat f = a.at(r, c) * inv;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

namespace {

// Row echelon form in place; returns pivot columns (least-index pivoting).
std::vector<int> echelon(QMat& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat inv = 1 / a.at(r, c);
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int QMat::rank() const {
    QMat a = *this;
    return int(echelon(a).size());
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv = echelon(aug);
    if (int(piv.size()) != n || piv.back() != n - 1) {
        // pivots must be exactly the first n columns
        for (int k = 0; k < int(piv.size()); ++k)
            if (piv[k] != k) return std::nullopt;
        if (int(piv.size()) != n) return std::nullopt;
    }
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
    QMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> piv = echelon(aug);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;  // inconsistent
    QVec x(cols_, Rat(0));
    for (int k = 0; k < int(piv.size()); ++k) x[piv[k]] = aug.at(k, cols_);
    return x;
}

std::vector<QVec> QMat::kernel() const {
    QMat a = *this;
    std::vector<int> piv = echelon(a);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols_, Rat(0));
        v[c] = 1;
        for (int k = 0; k < int(piv.size()); ++k) v[piv[k]] = -a.at(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Integer kernel via unimodular column reduction: transform A U so that a
// prefix of columns carries a staircase and the rest vanish; those columns
// of U are a saturated kernel basis.

std::vector<ZVec> z_kernel(const ZMat& a) {
    ZMat w = a;
    ZMat u = ZMat::identity(a.cols());
    int m = w.rows(), n = w.cols();
    auto sub_col = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < m; ++i) w.at(i, dst) -= q * w.at(i, src);
        for (int i = 0; i < n; ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto swap_col = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < m; ++i) std::swap(w.at(i, c1), w.at(i, c2));
        for (int i = 0; i < n; ++i) std::swap(u.at(i, c1), u.at(i, c2));
    };
    int pc = 0;
    for (int r = 0; r < m && pc < n; ++r) {
        for (;;) {
            int best = -1;
            for (int c = pc; c < n; ++c) {
                if (w.at(r, c) == 0) continue;
                if (best < 0 || cmp(abs(w.at(r, c)), abs(w.at(r, best))) < 0) best = c;
            }
            if (best < 0) break;  // row already clear
            bool others = false;
            for (int c = pc; c < n; ++c) {
                if (c == best || w.at(r, c) == 0) continue;
                others = true;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), w.at(r, c).get_mpz_t(), w.at(r, best).get_mpz_t());
                if (q != 0) sub_col(c, best, q);
                // exact multiples vanish; remainders shrink, so Euclid terminates
            }
            if (!others) {
                swap_col(pc, best);
                ++pc;
                break;
            }
        }
    }
    std::vector<ZVec> basis;
    for (int c = pc; c < n; ++c) basis.push_back(u.col(c));
    return basis;
}

ZMat complete_to_unimodular(const ZVec& v) {
    int n = int(v.size());
    if (vec_gcd(v) != 1) fail("NotPrimitive", "vector is not primitive");
    // Reduce v to e_0 by unimodular row operations tracked in t, then invert.
    ZVec cur = v;
    ZMat t = ZMat::identity(n);
    auto row_combine = [&](int i, int j, const Int& a, const Int& b, const Int& c, const Int& d) {
        // rows (i,j) <- (a*row_i + b*row_j, c*row_i + d*row_j), with ad-bc = +-1
        for (int k = 0; k < n; ++k) {
            Int x = t.at(i, k), y = t.at(j, k);
            t.at(i, k) = a * x + b * y;
            t.at(j, k) = c * x + d * y;
        }
        Int x = cur[i], y = cur[j];
        cur[i] = a * x + b * y;
        cur[j] = c * x + d * y;
    };
    for (int i = 1; i < n; ++i) {
        if (cur[i] == 0) continue;
        Int g, s, u2;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u2.get_mpz_t(),
                   cur[0].get_mpz_t(), cur[i].get_mpz_t());
        row_combine(0, i, s, u2, -cur[i] / g, cur[0] / g);
    }
    if (cur[0] == -1) {
        for (int k = 0; k < n; ++k) t.at(0, k) = -t.at(0, k);
        cur[0] = 1;
    }
    return t.unimodular_inverse();
}

PsdStatus psd_status(const QMat& s) {
    int n = s.rows();
    QMat a = s;
    std::vector<bool> alive(n, true);
    int rank = 0;
    for (;;) {
        int piv = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || a.at(i, i) == 0) continue;
            if (a.at(i, i) < 0) return {false, rank};
            piv = i;
            break;
        }
        if (piv < 0) {
            // all remaining diagonal entries vanish: semidefinite iff the
            // remaining block is identically zero
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (alive[i] && alive[j] && a.at(i, j) != 0) return {false, rank};
            return {true, rank};
        }
        ++rank;
        Rat inv = 1 / a.at(piv, piv);
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || i == piv) continue;
            Rat f = a.at(i, piv) * inv;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (!alive[j] || j == piv) continue;
                a.at(i, j) -= f * a.at(piv, j);
            }
        }
        alive[piv] = false;
    }
}

} // namespace qpc
