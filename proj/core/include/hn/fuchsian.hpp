#pragma once

#include "hn/isometry.hpp"
#include "hn/words.hpp"

#include <complex>
#include <vector>

namespace hn {

// Tri::No is always depth-limited evidence ("no witness up to the search
// depth"), never a certificate; Tri::Yes is a verified witness.
enum class Tri { Yes, No, Unknown };

enum class Simplicity { Simple, NonSimple, Unknown };

inline constexpr int kDefaultDepth = 6;

// Discrete faithful representation of the genus-g surface group acting on
// the hyperbolic plane, built from the side pairings of the regular 4g-gon
// with vertex angle 2pi/4g centered at the disk origin.  Generators follow
// the fixed order a1, b1, ..., a_g, b_g and satisfy the surface relator up
// to floating point error.  The fundamental polygon is kept (disk model)
// for the tessellation walk used by the simplicity test.
struct FuchsianRep {
    int genus = 2;
    std::vector<Isometry> gens;
    std::vector<std::complex<double>> verts;
    std::vector<int> side_letter;   // neighbor across side j is letter(side_letter[j]) * D

    // Isometry of a signed letter (+k generator, -k inverse).
    Isometry letter(int s) const;
};

FuchsianRep fuchsian_representation(int genus);

// Product of generator matrices over the word, combined as a balanced tree
// over chunks of 8 letters with determinant renormalization at each join.
Isometry evaluate(const FuchsianRep& rep, const GroupWord& w);

// Axis of evaluate(w); throws if the value is not hyperbolic.
OrientedGeodesic word_axis(const FuchsianRep& rep, const GroupWord& w);

// Images of the geodesic under all reduced words |c| <= depth (the axes of
// the conjugates c w c^-1 when base is the axis of w), in enumeration order.
std::vector<OrientedGeodesic> conjugate_axes(const FuchsianRep& rep,
                                             const OrientedGeodesic& base, int depth);

// Does the axis of w1 cross the axis of some conjugate c w2 c^-1 with
// |c| <= depth?  Conjugates sharing the axis of w1 (stabilizer cosets) and
// near-degenerate endpoint configurations are skipped.
Tri translates_cross(const FuchsianRep& rep, const GroupWord& w1, const GroupWord& w2,
                     int depth = kDefaultDepth, double tol = kGeomTol);

// Simplicity of the closed geodesic of w (of its primitive root if w is a
// proper power).  One translation period of the axis is traced through the
// polygon tessellation; the finitely many neighboring lifts that could meet
// it are tested for transversal crossing.  Near-degenerate steps (axis
// grazing a polygon vertex) and budget exhaustion yield Unknown.
Simplicity is_simple_closed_geodesic(const FuchsianRep& rep, const GroupWord& w,
                                     int depth = kDefaultDepth, double tol = kGeomTol);

}  // namespace hn
