#pragma once

#include "hn/geom2d.hpp"
#include "hn/graph.hpp"
#include "hn/rational.hpp"

#include <vector>

namespace hn {

// Polytope in Q^d held by its extreme points, sorted lexicographically.
struct RatPolytope {
    int dim = 0;
    std::vector<RatVec> verts;

    bool empty() const { return verts.empty(); }
};

// Hull of arbitrary generators: deduplicates, then drops every point lying
// in the hull of the remaining ones, leaving exactly the extreme points.
RatPolytope make_polytope(int dim, std::vector<RatVec> pts);

bool polytope_contains(const RatPolytope& P, const RatVec& p);
bool in_rel_interior(const RatPolytope& P, const RatVec& p);
bool polytope_equal(const RatPolytope& P, const RatPolytope& Q);
bool polytope_subset(const RatPolytope& P, const RatPolytope& Q);   // P subset of Q

// Hull of the deck rotation vectors abelianize(T_j) / r of one horseshoe.
RatPolytope rot_vertex(const Horseshoe& h, int genus);

// Hull of all deck rotation vectors over the vertices of one component.
RatPolytope class_polytope(const HorseshoeGraph& g, const SccResult& s, int cls);

// The rotation set of the graph: the union, over maximal chains of
// components in the condensation order, of the hulls of the member vertex
// polytopes.  Pieces contained in another piece are dropped; the result is
// sorted deterministically.  Throws when the component count exceeds 20 or
// the chain count exceeds 2^components.
std::vector<RatPolytope> rot_graph(const HorseshoeGraph& g, const SccResult& s);

bool rot_contains(const std::vector<RatPolytope>& pieces, const RatVec& p);

// Dimension of the affine span of a point set (0 for a single point).
int affine_dim(const std::vector<RatVec>& pts);

struct ShapeDiagnostics {
    std::vector<int> chaotic_classes;       // components whose polytope is not a point
    bool chaotic_bound_ok = true;           // count <= 2g - 2
    std::vector<int> classes_missing_zero;  // chaotic components whose polytope omits 0
    bool zero_in_set = false;
    int span_dim = 0;                       // affine dimension of the whole set
};
ShapeDiagnostics shape_diagnostics(const HorseshoeGraph& g, const SccResult& s,
                                   const std::vector<RatPolytope>& pieces);

// Exact convex hull of the (ci, cj) coordinate projection, CCW.
Polygon project2d(const RatPolytope& P, int ci, int cj);

}  // namespace hn
