#include "hn/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hn {

void validate_orbit(const FuchsianRep& rep, const OrbitProxy& o) {
    if (o.period < 1) throw std::invalid_argument("orbit " + o.id + ": period must be >= 1");
    if (o.word.empty()) throw std::invalid_argument("orbit " + o.id + ": empty word");
    if (classify(evaluate(rep, o.word)) != IsoType::Hyperbolic)
        throw std::invalid_argument("orbit " + o.id + ": word is not hyperbolic");
}

RatVec rotation_vector(const OrbitProxy& o) {
    std::vector<long long> ab = abelianize(o.word);
    RatVec out(ab.size());
    for (size_t i = 0; i < ab.size(); ++i) out[i] = Rat(ab[i]) / o.period;
    return out;
}

double rotation_speed(const FuchsianRep& rep, const OrbitProxy& o) {
    return translation_length(evaluate(rep, o.word)) / o.period;
}

Tri dynamically_transverse(const FuchsianRep& rep, const OrbitProxy& o1, const OrbitProxy& o2,
                           int depth) {
    validate_orbit(rep, o1);
    validate_orbit(rep, o2);
    return translates_cross(rep, o1.word, o2.word, depth);
}

bool same_axis_set(const GroupWord& u, const GroupWord& v) {
    GroupWord pu = primitive_root(u);
    GroupWord pv = primitive_root(v);
    return conjugate_as_cyclic_words(pu, pv) || conjugate_as_cyclic_words(pu, invert(pv));
}

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ClassPartition partition(const FuchsianRep& rep, const std::vector<OrbitProxy>& orbits,
                         int depth) {
    int n = static_cast<int>(orbits.size());
    if (n == 0) throw std::invalid_argument("partition: empty orbit list");
    for (const OrbitProxy& o : orbits) validate_orbit(rep, o);

    DSU dsu(n);
    std::vector<bool> transverse_mark(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (same_axis_set(orbits[i].word, orbits[j].word)) dsu.unite(i, j);
            if (dynamically_transverse(rep, orbits[i], orbits[j], depth) == Tri::Yes) {
                dsu.unite(i, j);
                transverse_mark[i] = transverse_mark[j] = true;
            }
        }

    std::vector<int> roots;
    std::vector<int> class_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = dsu.find(i);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(roots.size());
            roots.push_back(r);
        }
    }
    ClassPartition part;
    part.classes.resize(roots.size());
    part.class_of.resize(n);
    for (int i = 0; i < n; ++i) {
        int c = class_of[dsu.find(i)];
        part.class_of[i] = c;
        part.classes[c].members.push_back(i);
    }
    for (OrbitClass& cls : part.classes) {
        for (int m : cls.members) {
            if (transverse_mark[m]) cls.chaotic = true;
            if (!cls.chaotic &&
                is_simple_closed_geodesic(rep, orbits[m].word, depth) == Simplicity::NonSimple)
                cls.chaotic = true;
        }
    }
    return part;
}

namespace {

double interval_mid(const BoundaryInterval& iv) {
    return norm_angle(iv.lo + ccw_gap(iv.lo, iv.hi) / 2);
}

// Cluster circle points into minimal covering arcs: cut at the largest gap,
// then split wherever consecutive points are farther apart than merge_gap.
std::vector<BoundaryInterval> cluster_points(std::vector<double> pts, double merge_gap) {
    std::vector<BoundaryInterval> out;
    if (pts.empty()) return out;
    std::sort(pts.begin(), pts.end());
    size_t n = pts.size();
    size_t cut = 0;
    double widest = -1.0;
    for (size_t i = 0; i < n; ++i) {
        double gap = ccw_gap(pts[i], pts[(i + 1) % n]);
        if (gap > widest) {
            widest = gap;
            cut = (i + 1) % n;
        }
    }
    double lo = pts[cut], hi = pts[cut];
    for (size_t s = 1; s < n; ++s) {
        double p = pts[(cut + s) % n];
        if (ccw_gap(hi, p) <= merge_gap) {
            hi = p;
        } else {
            out.push_back({lo, hi});
            lo = hi = p;
        }
    }
    out.push_back({lo, hi});
    std::sort(out.begin(), out.end(),
              [](const BoundaryInterval& a, const BoundaryInterval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace

std::vector<BoundaryInterval> limit_hull(const FuchsianRep& rep,
                                         const std::vector<OrbitProxy>& orbits,
                                         const OrbitClass& cls, int depth, double merge_gap) {
    if (cls.members.empty()) throw std::invalid_argument("limit_hull: empty class");

    std::vector<OrientedGeodesic> axes;
    for (int m : cls.members) {
        OrientedGeodesic base = word_axis(rep, orbits[m].word);
        for (const OrientedGeodesic& g : conjugate_axes(rep, base, depth)) {
            bool dup = false;
            for (const OrientedGeodesic& h : axes)
                if (same_geodesic(g, h)) {
                    dup = true;
                    break;
                }
            if (!dup) axes.push_back(g);
        }
    }

    // Connected crossing component anchored at the first member's own axis.
    OrientedGeodesic anchor = word_axis(rep, orbits[cls.members.front()].word);
    std::vector<bool> in_comp(axes.size(), false);
    std::vector<size_t> queue;
    for (size_t i = 0; i < axes.size(); ++i)
        if (same_geodesic(axes[i], anchor)) {
            in_comp[i] = true;
            queue.push_back(i);
            break;
        }
    while (!queue.empty()) {
        size_t cur = queue.back();
        queue.pop_back();
        for (size_t i = 0; i < axes.size(); ++i) {
            if (in_comp[i]) continue;
            CrossResult c = geodesics_cross(axes[cur], axes[i]);
            if (c.crosses && !c.degenerate) {
                in_comp[i] = true;
                queue.push_back(i);
            }
        }
    }

    std::vector<double> pts;
    for (size_t i = 0; i < axes.size(); ++i)
        if (in_comp[i]) {
            pts.push_back(norm_angle(axes[i].from));
            pts.push_back(norm_angle(axes[i].to));
        }
    return cluster_points(std::move(pts), merge_gap);
}

namespace {

// Index of the arc containing theta, or -1.
int arc_cover_index(const std::vector<BoundaryInterval>& arcs, double theta, double tol) {
    for (size_t i = 0; i < arcs.size(); ++i) {
        double span = ccw_gap(arcs[i].lo, arcs[i].hi);
        double pos = ccw_gap(arcs[i].lo, theta);
        if (pos <= span + tol || pos >= 2 * M_PI - tol) return static_cast<int>(i);
    }
    return -1;
}

// Index of the complementary gap containing theta (arcs sorted by lo):
// gap i runs from arcs[i].hi ccw to arcs[i+1].lo.
int gap_index(const std::vector<BoundaryInterval>& arcs, double theta) {
    size_t n = arcs.size();
    for (size_t i = 0; i < n; ++i) {
        double lo = arcs[i].hi;
        double hi = arcs[(i + 1) % n].lo;
        if (ccw_gap(lo, theta) <= ccw_gap(lo, hi)) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

Tri separates(const FuchsianRep& rep, const std::vector<OrbitProxy>& orbits,
              const ClassPartition& part, int i, int j, int k, int depth) {
    int nc = static_cast<int>(part.classes.size());
    if (i < 0 || i >= nc || j < 0 || j >= nc || k < 0 || k >= nc)
        throw std::invalid_argument("separates: class id out of range");
    if (j == i || j == k) throw std::invalid_argument("separates: separator must be distinct");
    if (depth <= 0) return Tri::Unknown;

    // Enumeration budget: hulls and translate conjugators clamped to keep
    // the chord sweep tractable; answers are relative to this budget.
    int d = std::min(depth, 3);
    std::vector<BoundaryInterval> hi_ = limit_hull(rep, orbits, part.classes[i], d);
    std::vector<BoundaryInterval> hk = limit_hull(rep, orbits, part.classes[k], d);
    std::vector<BoundaryInterval> hj = limit_hull(rep, orbits, part.classes[j], d);
    if (hi_.empty() || hk.empty() || hj.empty()) return Tri::Unknown;

    // Aligned translate orbits: conjugate_axes enumerates the same reduced
    // conjugators in the same order for every base geodesic, so index t
    // across the per-interval lists is one deck translate of the j-hull.
    std::vector<std::vector<OrientedGeodesic>> moved;
    moved.reserve(hj.size());
    for (const BoundaryInterval& iv : hj)
        moved.push_back(conjugate_axes(rep, OrientedGeodesic{iv.lo, iv.hi}, d));
    size_t translates = moved.empty() ? 0 : moved.front().size();
    std::vector<std::vector<BoundaryInterval>> arc_sets(translates);
    for (size_t t = 0; t < translates; ++t) {
        arc_sets[t].reserve(moved.size());
        for (const auto& lst : moved)
            arc_sets[t].push_back({norm_angle(lst[t].from), norm_angle(lst[t].to)});
        std::sort(arc_sets[t].begin(), arc_sets[t].end(),
                  [](const BoundaryInterval& x, const BoundaryInterval& y) {
                      return x.lo < y.lo;
                  });
    }

    int separated = 0, total = 0;
    for (const BoundaryInterval& ivi : hi_)
        for (const BoundaryInterval& ivk : hk) {
            double a = interval_mid(ivi);
            double b = interval_mid(ivk);
            ++total;
            bool sep = false;
            for (size_t t = 0; t < translates && !sep; ++t) {
                const std::vector<BoundaryInterval>& arcs = arc_sets[t];
                int ca = arc_cover_index(arcs, a, kGeomTol);
                int cb = arc_cover_index(arcs, b, kGeomTol);
                if (ca >= 0 || cb >= 0) {
                    sep = true;
                } else {
                    sep = gap_index(arcs, a) != gap_index(arcs, b);
                }
            }
            if (sep) ++separated;
        }
    if (total == 0) return Tri::Unknown;
    if (separated == total) return Tri::Yes;
    if (separated == 0) return Tri::No;
    return Tri::Unknown;
}

}  // namespace hn
