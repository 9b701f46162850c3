#pragma once

// Seeds from collections of primitive plane vectors, smooth complete fans
// refining the rays, boundary intersection data, the q-Painlevé criterion,
// null roots, and the intersection form on the kernel lattice K°.

#include <array>
#include <string>
#include <vector>

#include "qpcluster/linalg.hpp"
#include "qpcluster/seed.hpp"

namespace qpc {

using Vec2 = std::array<long long, 2>;

long long wedge(const Vec2& a, const Vec2& b);
bool is_primitive(const Vec2& v);
// counterclockwise angle order starting from the positive x-axis
bool angle_less(const Vec2& a, const Vec2& b);

struct ToricData {
    std::vector<Vec2> vectors;
    int orientation = 1;
};

// NotPrimitive unless every vector is nonzero with coprime coordinates;
// RankDeficient unless the vectors span the plane.
void validate_toric(const ToricData& d);

// Seed on N° = Z^I with {e_i, e_j} = orientation * (w_i ∧ w_j).
Seed seed_from_vectors(const ToricData& d);

// Counterclockwise cyclic list of distinct primitive rays with consecutive
// determinants all equal to 1.
struct Fan2D {
    std::vector<Vec2> rays;
};

// The distinct rays of the data, sorted counterclockwise starting from the
// ray of the first vector, with every singular sector resolved minimally.
// NotPositivelySpanning when the rays leave a half-plane gap.
Fan2D smooth_complete_fan(const ToricData& d);

// One extra ray (the sum of the two generators) in every sector.
Fan2D star_subdivide(const Fan2D& f);

struct BoundaryData {
    Fan2D fan;
    std::vector<long long> self_int;  // n'_j with w'_{j-1} + w'_{j+1} = -n'_j w'_j
    std::vector<long long> mult;      // m'_j = #{ i : w_i = w'_j }
    std::vector<int> ray_of;          // ray index of each input vector
    QMat h;                           // diagonal n'_j - m'_j, cyclic adjacency 1
};

BoundaryData boundary_data(const ToricData& d, const Fan2D& fan);

enum class QpVerdict { QPainleve, NegativeDefinite, Indefinite };

// QPainleve iff negative semidefinite with nontrivial kernel.
QpVerdict qp_type_check(const QMat& h);

struct NullRoot {
    std::vector<Int> c_prime;  // positive coprime per ray, H c' = 0
    std::vector<Int> c;        // c_i = c'_{ray of w_i}
    ZVec delta;                // δ = Σ c_i e_i in N° coordinates
};

NullRoot null_root(const ToricData& d, const BoundaryData& bd);

// Columns form a saturated basis of K° = { a in Z^I : Σ a_i w_i = 0 }.
ZMat k_circ_basis(const ToricData& d);

// Intersection pairing of two elements of K° given in Z^I coordinates.
Int k_pair(const ToricData& d, const BoundaryData& bd, const ZVec& a, const ZVec& b);

struct KForm {
    ZMat basis;
    QMat gram;
};

KForm k_form(const ToricData& d, const BoundaryData& bd);

// "E0(1)" … "E8(1)", or "E1(1)'".  NotQPainleveType when the boundary matrix
// fails the semidefiniteness test, UnrecognizedInvariants when the lattice
// invariants match none of the ten types.
std::string classify_type(const ToricData& d);

} // namespace qpc
