#pragma once

#include "hn/fuchsian.hpp"
#include "hn/rational.hpp"
#include "hn/words.hpp"

#include <string>
#include <vector>

namespace hn {

// Periodic orbit proxy: the deck transformation of one periodic lift and
// the period.  The tracking geodesic is the axis of the evaluated word.
struct OrbitProxy {
    std::string id;
    GroupWord word;
    int period = 1;
};

// Throws std::invalid_argument unless period >= 1 and the word evaluates to
// a hyperbolic isometry (positive rotation speed).
void validate_orbit(const FuchsianRep& rep, const OrbitProxy& o);

RatVec rotation_vector(const OrbitProxy& o);                        // abelianize / period
double rotation_speed(const FuchsianRep& rep, const OrbitProxy& o); // length / period

// Axes of o1 and a conjugate translate of o2 cross (delegated to the word
// translate search).  Symmetric; No is depth-limited evidence.
Tri dynamically_transverse(const FuchsianRep& rep, const OrbitProxy& o1, const OrbitProxy& o2,
                           int depth = kDefaultDepth);

// Equal axis sets: the primitive roots agree up to conjugacy and inversion
// (same unoriented closed geodesic).
bool same_axis_set(const GroupWord& u, const GroupWord& v);

struct OrbitClass {
    std::vector<int> members;   // indices into the input list, ascending
    bool chaotic = false;
};

struct ClassPartition {
    std::vector<OrbitClass> classes;   // ordered by smallest member
    std::vector<int> class_of;         // orbit index -> class index
};

// Connected components of the merge relation: a verified transverse pair,
// or equal axis sets (conjugate primitive roots up to inversion, as cyclic
// words).  A class is chaotic when it contains a transverse pair or a
// non-simple closed geodesic.
ClassPartition partition(const FuchsianRep& rep, const std::vector<OrbitProxy>& orbits,
                         int depth = kDefaultDepth);

// Closed arc [lo, hi] counterclockwise on the boundary circle; lo == hi is
// a single point.
struct BoundaryInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Approximate limit hull of one class: endpoints of the axes in the
// connected crossing component anchored at the first member's axis, over
// conjugators up to the depth, coalesced into a minimal covering interval
// set (points closer than merge_gap share an interval).
std::vector<BoundaryInterval> limit_hull(const FuchsianRep& rep,
                                         const std::vector<OrbitProxy>& orbits,
                                         const OrbitClass& cls, int depth = kDefaultDepth,
                                         double merge_gap = 1e-6);

// Does class j separate class i from class k in the anchored lift
// configuration?  Chords sampled between the i- and k-hull intervals are
// tested against translates of the j-hull up to the depth: all separated ->
// Yes, none -> No, otherwise (or no evidence, depth 0) -> Unknown.
Tri separates(const FuchsianRep& rep, const std::vector<OrbitProxy>& orbits,
              const ClassPartition& part, int i, int j, int k, int depth = kDefaultDepth);

}  // namespace hn
