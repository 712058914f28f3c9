#pragma once

#include "hn/rational.hpp"

#include <optional>
#include <vector>

namespace hn {

// Exact rational point in the plane.
struct P2 {
    Rat x, y;
    bool operator==(const P2&) const = default;
};

using Polygon = std::vector<P2>;   // vertex cycle, no repeated closing vertex

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 straight.
int orient(const P2& a, const P2& b, const P2& c);

// c on the closed segment [a, b] (collinear and between).
bool on_segment(const P2& a, const P2& b, const P2& c);

// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const P2& a, const P2& b, const P2& c, const P2& d);

Rat polygon_area2(const Polygon& poly);   // doubled signed area, ccw positive

// Pairwise edge check: edges may touch only at shared polygon vertices.
bool polygon_is_simple(const Polygon& poly);

// +1 strictly inside, 0 on the boundary, -1 outside.  The polygon must be
// simple; orientation does not matter.
int point_in_polygon(const Polygon& poly, const P2& p);

struct BBox {
    Rat xlo, xhi, ylo, yhi;
};
BBox polygon_bbox(const Polygon& poly);
bool bbox_overlap(const BBox& a, const BBox& b);   // closed boxes

// Intersection of the polygon with the halfplane a*x + b*y <= c, split into
// connected components.  The polygon must be simple and ccw oriented; edges
// lying entirely on the cut line are kept as boundary.  Components reduced
// to a point or a segment are dropped.
std::vector<Polygon> clip_halfplane(const Polygon& poly, const Rat& a, const Rat& b,
                                    const Rat& c);

// Convenience: components of poly within the horizontal band ylo <= y <= yhi.
std::vector<Polygon> clip_band(const Polygon& poly, const Rat& ylo, const Rat& yhi);

}  // namespace hn
