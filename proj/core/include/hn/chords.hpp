#pragma once

#include "hn/isometry.hpp"
#include "hn/words.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hn {

inline constexpr double kLeafTol = 1e-7;

// Oriented leaf of the boundary lamination, drawn as a chord of the unit
// circle from angle `from` to angle `to`.  The left side L(phi) of the leaf
// is the half-disk whose boundary arc runs counterclockwise from `to` back
// to `from`.
struct Leaf {
    double from = 0.0;
    double to = 0.0;
};

bool leaf_equal(const Leaf& a, const Leaf& b, double tol = kLeafTol);

// Strict inclusion L(a) inside L(b) of the left half-disks.
bool nested_left(const Leaf& a, const Leaf& b, double tol = kGeomTol);

// Path transverse to the foliation: leaves strictly nested along the index,
// L(path[i]) inside L(path[j]) for i < j.
struct TransversePath {
    std::vector<Leaf> leaves;

    int size() const { return static_cast<int>(leaves.size()); }
};

// Index pairs (i, j) violating the nesting invariant; empty means valid.
std::vector<std::pair<int, int>> path_violations(const TransversePath& p,
                                                 double tol = kGeomTol);

// Equality as leaf sets up to tolerance (order insensitive).
bool path_equivalent(const TransversePath& a, const TransversePath& b,
                     double tol = kLeafTol);

Leaf apply_mobius(const Isometry& g, const Leaf& l);
TransversePath apply_mobius(const Isometry& g, const TransversePath& p);

// Is f1 above f2 relative to the oriented leaf f3?  All three chords must be
// pairwise disjoint and f1, f2 on the same side of f3; violations throw
// std::invalid_argument.  "Above" means f1's shadow interval on f3's side
// arc sits nearer the head of f3 than f2's.
bool is_above(const Leaf& f1, const Leaf& f2, const Leaf& f3, double tol = kGeomTol);

struct FTransverseWitness {
    int a1 = 0, b1 = 0;   // indices in the first path, a1 < t1 < b1
    int a2 = 0, b2 = 0;   // indices in the second path, a2 < t2 < b2
};

// Transversality of the two paths at the shared leaf p1[t1] == p2[t2]:
// searches indices a1 < t1 < b1, a2 < t2 < b2 with p1[a1] above p2[a2] and
// p1[b1] below p2[b2] relative to the shared leaf.  Non-comparable index
// pairs (crossing chords) are skipped.  Throws if the pivot leaves differ.
std::optional<FTransverseWitness> f_transverse_intersection(
    const TransversePath& p1, int t1, const TransversePath& p2, int t2,
    double tol = kGeomTol, double leaf_tol = kLeafTol);

// First (t1, t2) in lexicographic order such that p and deck(p) have an
// F-transverse intersection at p[t1] == deck(p)[t2].
std::optional<std::pair<int, int>> self_transverse_with_deck(
    const TransversePath& p, const Isometry& deck, double tol = kGeomTol,
    double leaf_tol = kLeafTol);

struct ForcedPath {
    TransversePath path;
    int order = 0;
};

// Concatenation forced by a transverse intersection at (t1, t2): the prefix
// of p1 through t1 followed by the suffix of p2 after t2.  Orders add.  The
// result is re-verified; nesting failures throw std::runtime_error.
ForcedPath force_concatenate(const TransversePath& p1, int t1, int order1,
                             const TransversePath& p2, int t2, int order2,
                             double tol = kGeomTol, double leaf_tol = kLeafTol);

struct ExtractedHorseshoe {
    int period = 0;                  // k * r
    std::vector<GroupWord> decks;    // T, T^2, ..., T^k
};

// Horseshoe data certified by a self transverse intersection of the path
// with its deck image at witness (t, s), s < t.  The witness is re-checked.
ExtractedHorseshoe extract_horseshoe(const TransversePath& path, int order_r,
                                     const Isometry& deck, const GroupWord& deck_word,
                                     int k, std::pair<int, int> witness,
                                     double tol = kGeomTol, double leaf_tol = kLeafTol);

struct ConnectionSpec {
    int genus = 2;
    TransversePath first, second;
    Isometry deck1, deck2;
    int r1 = 1, r2 = 1;
    int k1 = 2, k2 = 2;
    std::pair<int, int> witness1{0, 0}, witness2{0, 0};   // (t, s) with s < t
};

struct ConnectionEdge {
    long long n = 0;
    GroupWord word;   // identity after normalization
};

// Connection between the two horseshoes cut out of a split path; the edge
// transition time is n = k1*r1 + r1 + r2 and the relative deck normalizes
// to the identity word.  Witnesses are re-checked; k1, k2 must be >= 2.
ConnectionEdge extract_connection(const ConnectionSpec& spec, double tol = kGeomTol,
                                  double leaf_tol = kLeafTol);

// Text format: one "theta1 theta2" pair per line; blank line between paths.
std::vector<TransversePath> load_chord_paths(std::istream& in);
void save_chord_paths(std::ostream& out, const std::vector<TransversePath>& paths);

}  // namespace hn
