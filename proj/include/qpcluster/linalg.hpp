#pragma once

// Dense exact-arithmetic matrices over GMP integers and rationals, sized
// for lattices of rank <= ~12.  Everything here is deterministic: pivot
// choices are by least index and there is no floating point anywhere.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "qpcluster/error.hpp"

namespace qpc {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Vector helpers

Int vec_gcd(const ZVec& v);
bool vec_is_zero(const ZVec& v);
ZVec vec_neg(const ZVec& v);
ZVec vec_add(const ZVec& a, const ZVec& b);
ZVec vec_sub(const ZVec& a, const ZVec& b);
ZVec vec_scale(const ZVec& v, const Int& c);
Rat vec_dot(const QVec& a, const QVec& b);
QVec to_qvec(const ZVec& v);
std::optional<ZVec> to_zvec(const QVec& v);  // nullopt unless all entries integral

class QMat;

class ZMat {
public:
    ZMat() = default;
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Int(0)) {}

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    ZVec col(int j) const;
    void set_col(int j, const ZVec& v);

    ZMat transpose() const;
    ZMat operator*(const ZMat& rhs) const;
    ZVec operator*(const ZVec& v) const;
    bool operator==(const ZMat& rhs) const = default;

    QMat to_q() const;
    Int det() const;
    bool is_unimodular() const;
    // Inverse of a unimodular matrix; fails on anything else.
    ZMat unimodular_inverse() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rat(0)) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    QVec col(int j) const;
    void set_col(int j, const QVec& v);

    QMat transpose() const;
    QMat operator*(const QMat& rhs) const;
    QVec operator*(const QVec& v) const;
    QMat operator*(const Rat& c) const;
    QMat operator+(const QMat& rhs) const;
    QMat operator-(const QMat& rhs) const;
    bool operator==(const QMat& rhs) const = default;

    bool is_integral() const;
    ZMat to_z() const;  // requires is_integral()

    Rat det() const;
    int rank() const;
    std::optional<QMat> inverse() const;

    // Particular solution of A x = b with free variables set to zero and
    // pivots chosen by least row index, or nullopt if inconsistent.
    std::optional<QVec> solve(const QVec& b) const;

    // Basis of the rational kernel, in a deterministic order.
    std::vector<QVec> kernel() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Saturated basis of { v in Z^n : A v = 0 }, via unimodular column reduction.
std::vector<ZVec> z_kernel(const ZMat& a);

// Unimodular matrix whose first column is the given primitive vector.
ZMat complete_to_unimodular(const ZVec& v);

struct PsdStatus {
    bool semidefinite = false;
    int rank = 0;
};

// Exact positive-semidefiniteness of a symmetric rational matrix via
// pivoted Schur complements.  rank is meaningful only when semidefinite.
PsdStatus psd_status(const QMat& s);

} // namespace qpc
