#include "hn/chords.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hn {

bool leaf_equal(const Leaf& a, const Leaf& b, double tol) {
    return angle_dist(a.from, b.from) < tol && angle_dist(a.to, b.to) < tol;
}

bool nested_left(const Leaf& a, const Leaf& b, double tol) {
    // Both ends of a's left arc strictly inside b's left arc, and a's left
    // arc must not wrap around b's head.
    if (!in_open_arc(a.to, b.to, b.from, tol)) return false;
    if (!in_open_arc(a.from, b.to, b.from, tol)) return false;
    return !in_open_arc(b.to, a.to, a.from, 0.0);
}

std::vector<std::pair<int, int>> path_violations(const TransversePath& p, double tol) {
    std::vector<std::pair<int, int>> bad;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (!nested_left(p.leaves[i], p.leaves[j], tol)) bad.emplace_back(i, j);
    return bad;
}

bool path_equivalent(const TransversePath& a, const TransversePath& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Leaf& la : a.leaves) {
        bool hit = false;
        for (int j = 0; j < b.size() && !hit; ++j) {
            if (!used[j] && leaf_equal(la, b.leaves[j], tol)) {
                used[j] = true;
                hit = true;
            }
        }
        if (!hit) return false;
    }
    return true;
}

Leaf apply_mobius(const Isometry& g, const Leaf& l) {
    return {apply_boundary(g, l.from), apply_boundary(g, l.to)};
}

TransversePath apply_mobius(const Isometry& g, const TransversePath& p) {
    TransversePath q;
    q.leaves.reserve(p.leaves.size());
    for (const Leaf& l : p.leaves) q.leaves.push_back(apply_mobius(g, l));
    return q;
}

namespace {

bool chords_share_endpoint(const Leaf& a, const Leaf& b, double tol) {
    for (double x : {a.from, a.to})
        for (double y : {b.from, b.to})
            if (angle_dist(x, y) < tol) return true;
    return false;
}

bool chords_cross(const Leaf& a, const Leaf& b, double tol) {
    bool c1 = in_open_arc(b.from, a.from, a.to, tol);
    bool c2 = in_open_arc(b.to, a.from, a.to, tol);
    return c1 != c2;
}

// -1 right of f3, +1 left of f3, throws if split or touching.
int side_of_leaf(const Leaf& f, const Leaf& f3, double tol) {
    bool from_left = in_open_arc(f.from, f3.to, f3.from, tol);
    bool to_left = in_open_arc(f.to, f3.to, f3.from, tol);
    if (from_left && to_left) return +1;
    bool from_right = in_open_arc(f.from, f3.from, f3.to, tol);
    bool to_right = in_open_arc(f.to, f3.from, f3.to, tol);
    if (from_right && to_right) return -1;
    throw std::invalid_argument("chord is not strictly on one side of the reference leaf");
}

// Position of an endpoint along f3's side arc, measured from the tail end of
// f3 toward its head end.
double arc_position(double theta, const Leaf& f3, int side) {
    return side > 0 ? ccw_gap(theta, f3.from) : ccw_gap(f3.from, theta);
}

}  // namespace

bool is_above(const Leaf& f1, const Leaf& f2, const Leaf& f3, double tol) {
    if (chords_share_endpoint(f1, f2, tol) || chords_share_endpoint(f1, f3, tol) ||
        chords_share_endpoint(f2, f3, tol))
        throw std::invalid_argument("chords sharing endpoints are not comparable");
    if (chords_cross(f1, f2, tol) || chords_cross(f1, f3, tol) || chords_cross(f2, f3, tol))
        throw std::invalid_argument("crossing chords are not comparable");
    int s1 = side_of_leaf(f1, f3, tol);
    int s2 = side_of_leaf(f2, f3, tol);
    if (s1 != s2)
        throw std::invalid_argument("chords lie on different sides of the reference leaf");
    double lo1 = std::min(arc_position(f1.from, f3, s1), arc_position(f1.to, f3, s1));
    double hi2 = std::max(arc_position(f2.from, f3, s1), arc_position(f2.to, f3, s1));
    return lo1 > hi2;
}

namespace {

// is_above wrapped for the exhaustive scans: non-comparable pairs are not
// witnesses rather than errors.
bool above_or_skip(const Leaf& f1, const Leaf& f2, const Leaf& f3, double tol, bool* ok) {
    try {
        bool r = is_above(f1, f2, f3, tol);
        *ok = true;
        return r;
    } catch (const std::invalid_argument&) {
        *ok = false;
        return false;
    }
}

}  // namespace

std::optional<FTransverseWitness> f_transverse_intersection(const TransversePath& p1, int t1,
                                                            const TransversePath& p2, int t2,
                                                            double tol, double leaf_tol) {
    if (t1 < 0 || t1 >= p1.size() || t2 < 0 || t2 >= p2.size())
        throw std::invalid_argument("pivot index out of range");
    if (!leaf_equal(p1.leaves[t1], p2.leaves[t2], leaf_tol))
        throw std::invalid_argument("paths do not share a leaf at the pivot indices");
    const Leaf& pivot = p1.leaves[t1];
    for (int a1 = 0; a1 < t1; ++a1)
        for (int a2 = 0; a2 < t2; ++a2) {
            bool ok = false;
            if (!above_or_skip(p1.leaves[a1], p2.leaves[a2], pivot, tol, &ok) || !ok) continue;
            for (int b1 = t1 + 1; b1 < p1.size(); ++b1)
                for (int b2 = t2 + 1; b2 < p2.size(); ++b2) {
                    bool ok2 = false;
                    if (above_or_skip(p2.leaves[b2], p1.leaves[b1], pivot, tol, &ok2) && ok2)
                        return FTransverseWitness{a1, b1, a2, b2};
                }
        }
    return std::nullopt;
}

std::optional<std::pair<int, int>> self_transverse_with_deck(const TransversePath& p,
                                                             const Isometry& deck, double tol,
                                                             double leaf_tol) {
    TransversePath q = apply_mobius(deck, p);
    for (int t1 = 0; t1 < p.size(); ++t1)
        for (int t2 = 0; t2 < q.size(); ++t2) {
            if (!leaf_equal(p.leaves[t1], q.leaves[t2], leaf_tol)) continue;
            if (f_transverse_intersection(p, t1, q, t2, tol, leaf_tol))
                return std::make_pair(t1, t2);
        }
    return std::nullopt;
}

ForcedPath force_concatenate(const TransversePath& p1, int t1, int order1,
                             const TransversePath& p2, int t2, int order2, double tol,
                             double leaf_tol) {
    if (!f_transverse_intersection(p1, t1, p2, t2, tol, leaf_tol))
        throw std::invalid_argument("paths are not transverse at the given pivot");
    ForcedPath out;
    out.order = order1 + order2;
    out.path.leaves.assign(p1.leaves.begin(), p1.leaves.begin() + t1 + 1);
    out.path.leaves.insert(out.path.leaves.end(), p2.leaves.begin() + t2 + 1, p2.leaves.end());
    auto bad = path_violations(out.path, tol);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "forced concatenation broke nesting at index pairs:";
        for (auto& [i, j] : bad) os << " (" << i << "," << j << ")";
        throw std::runtime_error(os.str());
    }
    return out;
}

ExtractedHorseshoe extract_horseshoe(const TransversePath& path, int order_r,
                                     const Isometry& deck, const GroupWord& deck_word,
                                     int k, std::pair<int, int> witness, double tol,
                                     double leaf_tol) {
    if (k < 1) throw std::invalid_argument("horseshoe extraction needs k >= 1");
    if (order_r < 1) throw std::invalid_argument("path order must be positive");
    auto [t, s] = witness;
    if (!(s < t)) throw std::invalid_argument("witness must satisfy s < t");
    TransversePath q = apply_mobius(deck, path);
    if (!f_transverse_intersection(path, t, q, s, tol, leaf_tol))
        throw std::invalid_argument("witness is not an F-transverse self intersection");
    ExtractedHorseshoe h;
    h.period = k * order_r;
    for (int i = 1; i <= k; ++i) h.decks.push_back(power(deck_word, i));
    return h;
}

ConnectionEdge extract_connection(const ConnectionSpec& spec, double tol, double leaf_tol) {
    if (spec.k1 < 2 || spec.k2 < 2)
        throw std::invalid_argument("connection extraction needs k1, k2 >= 2");
    if (spec.r1 < 1 || spec.r2 < 1) throw std::invalid_argument("orders must be positive");
    auto check = [&](const TransversePath& p, const Isometry& deck, std::pair<int, int> w) {
        auto [t, s] = w;
        if (!(s < t)) throw std::invalid_argument("witness must satisfy s < t");
        TransversePath q = apply_mobius(deck, p);
        if (!f_transverse_intersection(p, t, q, s, tol, leaf_tol))
            throw std::invalid_argument("witness is not an F-transverse self intersection");
    };
    check(spec.first, spec.deck1, spec.witness1);
    check(spec.second, spec.deck2, spec.witness2);
    ConnectionEdge e;
    e.n = static_cast<long long>(spec.k1) * spec.r1 + spec.r1 + spec.r2;
    e.word = GroupWord{spec.genus, {}};
    return e;
}

std::vector<TransversePath> load_chord_paths(std::istream& in) {
    std::vector<TransversePath> paths;
    TransversePath cur;
    std::string line;
    auto flush = [&] {
        if (!cur.leaves.empty()) {
            paths.push_back(cur);
            cur.leaves.clear();
        }
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double a, b;
        if (!(ls >> a)) {
            flush();
            continue;
        }
        if (!(ls >> b)) throw std::invalid_argument("chord line needs two angles: " + line);
        cur.leaves.push_back({norm_angle(a), norm_angle(b)});
    }
    flush();
    return paths;
}

void save_chord_paths(std::ostream& out, const std::vector<TransversePath>& paths) {
    char buf[64];
    for (size_t k = 0; k < paths.size(); ++k) {
        if (k) out << "\n";
        for (const Leaf& l : paths[k].leaves) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", l.from, l.to);
            out << buf << "\n";
        }
    }
}

}  // namespace hn
