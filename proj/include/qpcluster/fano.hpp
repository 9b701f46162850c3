#pragma once

#include <string>
#include <vector>

#include "qpcluster/toric.hpp"

namespace qpc {

// Convex lattice polygon with the origin strictly inside and primitive
// vertices. Facet j is the edge from vertices[j] to vertices[j+1]; its
// supporting line is <v, w> = -c, and l is the lattice length of the edge.
struct Facet {
    Vec2 w;
    long long c = 0;
    long long l = 0;

    bool operator==(const Facet&) const = default;
};

struct FanoPolygon {
    std::vector<Facet> facets;
    std::vector<Vec2> vertices;  // counterclockwise
};

// exact halfplane intersection of <v, w> >= -c over the given facets
FanoPolygon polygon_from_facets(const std::vector<std::pair<Vec2, long long>>& halfplanes);
FanoPolygon polygon_from_vertices(const std::vector<Vec2>& vertices);

// the polygon cut out by a toric dataset and its null root
FanoPolygon fano_polygon(const ToricData& d, const NullRoot& nr);
FanoPolygon fano_polygon(const ToricData& d);

// every facet satisfies c | l
bool no_remainders(const FanoPolygon& p);

// l/c copies of each facet normal, in facet order
ToricData seed_from_polygon(const FanoPolygon& p);

// equality up to a cyclic rotation of the vertex list
bool same_polygon(const FanoPolygon& a, const FanoPolygon& b);

// lattice plot: vertices '*', other boundary points '+', interior '.',
// the origin 'o'
std::string render_polygon(const FanoPolygon& p);

} // namespace qpc
