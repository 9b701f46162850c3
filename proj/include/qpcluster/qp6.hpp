#pragma once
// The sixth q-Painleve system on the E5(1) seed: a finer parameter lattice
// in which the quarter-power parameters are honest characters, the two
// involutive cluster transformations c1 and c2, the f fbar and g gunder
// identities, and numeric orbits of the alternating dynamics.

#include <utility>
#include <vector>

#include "qpcluster/catalog.hpp"
#include "qpcluster/xmap.hpp"

namespace qpc {

struct QP6Context {
    CatalogEntry entry;   // the underlying E5(1) dataset
    Seed seed;            // the same seed over the finer lattice
    ClusterWord c1, c2;
    std::vector<ZVec> a;  // exponents of a_0..a_5 in finer coordinates
    ZVec f, g, q;
    std::vector<ZVec> b;  // b_1..b_8 as printed quarter-power characters
};

QP6Context build_qp6_context();  // LatticeValidationFailed

// Symbolic pullbacks of the finer coordinate characters along c1 and c2.
std::pair<XMap, XMap> qp6_maps(const QP6Context& ctx, const SimplifyOptions& opts = {});

std::vector<CheckResult> verify_qp6_identities(const QP6Context& ctx,
                                               const SimplifyOptions& opts = {});

struct QP6Params {
    std::vector<Rat> a;  // a_0..a_5, each a positive fourth power of a rational
    Rat f0 = 0, g0 = 0;  // starting point, both nonzero
};

// Deterministic generic parameters used by the tests and the command line.
QP6Params qp6_default_params();

struct QP6Point {
    std::vector<Rat> x;      // the eight torus coordinates, exact
    std::vector<double> xd;  // the same point from the float pipeline
};

struct QP6Trajectory {
    std::vector<QP6Point> points;  // steps + 1 entries, the first is the start
    double max_rel_err = 0.0;      // float pipeline against exact, worst coordinate
};

// Alternating dynamics; each period applies c2 then c1 unless c1_first is
// set. steps counts single applications.
QP6Trajectory qp6_orbit(const QP6Context& ctx, const QP6Params& params, int steps,
                        bool c1_first = false);  // PoleAtPoint, NonGenericParameters

struct QP6State {
    std::vector<Rat> a;
    Rat f, g, q;
};

// Readable coordinates of one exact orbit point.
QP6State qp6_state(const QP6Context& ctx, const std::vector<Rat>& x);

}  // namespace qpc
