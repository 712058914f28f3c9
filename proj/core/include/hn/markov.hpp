#pragma once

#include "hn/geom2d.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hn {

// Piecewise-linear rectangle: a simple ccw polygon with four marked corner
// vertices splitting the boundary into the arcs bottom, vertical, top,
// vertical (in cyclic order).  Arc i runs from vertex corner[i] forward to
// vertex corner[(i+1)%4], endpoints included.
struct PLRectangle {
    Polygon poly;
    std::array<int, 4> corner;

    bool operator==(const PLRectangle&) const = default;
};

// Throws std::invalid_argument on any violated invariant.
void validate_rectangle(const PLRectangle& r);

// Vertex indices of boundary arc `arc` (0 bottom, 1 vertical, 2 top,
// 3 vertical), endpoints included, in boundary order.
std::vector<int> arc_indices(const PLRectangle& r, int arc);

// Exactly the square [0,1]^2 with the bottom mark on y = 0.
bool is_unit_square(const PLRectangle& r);

// Orientation-preserving axis-aligned chart change
// (x, y) -> (sx*x + tx, sy*y + ty) with sx, sy > 0.
struct BoxTransform {
    Rat sx, tx, sy, ty;
};

// Transform carrying an axis-aligned rectangle (bottom mark on its low-y
// side) onto the unit square.  Throws std::invalid_argument otherwise.
BoxTransform unit_square_transform(const PLRectangle& r2);

P2 apply(const BoxTransform& t, const P2& p);
PLRectangle apply(const BoxTransform& t, const PLRectangle& r);

// r2 must be the unit square.  True iff the horizontal sides of r1 lie
// strictly beyond y = 0 and y = 1 (in either pairing) and the part of r1
// inside the band 0 <= y <= 1 stays inside [0,1]^2.  Exact.
bool is_pre_markovian(const PLRectangle& r1, const PLRectangle& r2);

// Horizontal-subrectangle witness: a component of r1 within the band that
// spans y = 0 to y = 1 inside the square, extended past both band lines to
// clean cross cuts of r1.  Empty when no such component exists or no clean
// extension is available.
std::optional<PLRectangle> is_markovian(const PLRectangle& r1, const PLRectangle& r2);

// Minimum of the witness's strict separations: clearance of its horizontal
// sides beyond the band and of its band part inside the square's x-range.
// Throws std::invalid_argument when the intersection is not Markovian.
Rat perturbation_margin(const PLRectangle& r1, const PLRectangle& r2);

// (x, y) -> (a*x + b*y + tx, c*x + d*y + ty)
struct AffineMap {
    Rat a, b, c, d, tx, ty;
};
P2 apply(const AffineMap& m, const P2& p);

// Piecewise-linear map: affine images over a triangulated domain.
struct PLTriangle {
    std::array<P2, 3> dom;
    AffineMap map;
};
struct PLMap {
    std::vector<PLTriangle> pieces;
};

// Normalizes triangle orientation in place, then checks: nondegenerate
// pieces, pairwise disjoint interiors, continuity across touching
// boundaries, injectivity (pairwise disjoint image interiors).  Throws
// std::invalid_argument on failure.
void validate_map(PLMap& f);

bool in_domain(const PLMap& f, const P2& p);

// Image of p; throws std::invalid_argument when p is outside the domain.
P2 apply(const PLMap& f, const P2& p);

// Exact image polygon: edges are subdivided where they cross triangulation
// edges, then mapped piecewise.  The whole polygon must lie in the domain.
Polygon map_polygon(const PLMap& f, const Polygon& poly);
PLRectangle map_rectangle(const PLMap& f, const PLRectangle& r);

struct ChainOptions {
    double tol = 1e-9;        // closed chains: |f_n...f_1(x) - x| <= tol
    int max_depth = 64;       // bisection depth cap
    bool verify_markov = true;
};

// A point x in int(rects[0]) whose successive images under maps[i] lie in
// int(rects[i+1]); for closed chains (rects.front() == rects.back()) the
// returned point additionally satisfies the tolerance bound, in Euclidean
// norm, under exact evaluation.  Deterministic: closed chains first try the
// exact fixed points of the per-branch affine compositions in piece
// enumeration order, then centers of a leftmost-deepest box subdivision of
// the first rectangle; the first admissible candidate is returned.
P2 chain_point(const std::vector<PLRectangle>& rects, const std::vector<PLMap>& maps,
               const ChainOptions& opt = {});

}  // namespace hn
