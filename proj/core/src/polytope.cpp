#include "hn/polytope.hpp"

#include "hn/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hn {

namespace {

bool vec_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RatPolytope make_polytope(int dim, std::vector<RatVec> pts) {
    for (const RatVec& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("make_polytope: dimension mismatch");
    std::sort(pts.begin(), pts.end(), vec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // A point is extreme iff it is outside the hull of the others; removing
    // a redundant point never changes that hull.
    for (std::size_t i = 0; i < pts.size();) {
        std::vector<RatVec> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!others.empty() && in_convex_hull(others, pts[i]))
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    RatPolytope P;
    P.dim = dim;
    P.verts = std::move(pts);
    return P;
}

bool polytope_contains(const RatPolytope& P, const RatVec& p) {
    if (P.empty()) return false;
    if (static_cast<int>(p.size()) != P.dim)
        throw std::invalid_argument("polytope_contains: dimension mismatch");
    return in_convex_hull(P.verts, p);
}

bool in_rel_interior(const RatPolytope& P, const RatVec& p) {
    if (P.empty()) return false;
    if (static_cast<int>(p.size()) != P.dim)
        throw std::invalid_argument("in_rel_interior: dimension mismatch");
    return in_relative_interior(P.verts, p);
}

bool polytope_subset(const RatPolytope& P, const RatPolytope& Q) {
    if (P.empty()) return true;
    if (Q.empty()) return false;
    for (const RatVec& v : P.verts)
        if (!in_convex_hull(Q.verts, v)) return false;
    return true;
}

bool polytope_equal(const RatPolytope& P, const RatPolytope& Q) {
    // Extreme points are canonical, so equality is vertex-list equality.
    return P.dim == Q.dim && P.verts == Q.verts;
}

RatPolytope rot_vertex(const Horseshoe& h, int genus) {
    std::vector<RatVec> pts;
    for (const GroupWord& d : h.decks) {
        if (d.genus != genus)
            throw std::invalid_argument("rot_vertex: deck genus mismatch at " + h.id);
        std::vector<long long> ab = abelianize(d);
        RatVec v(ab.size());
        for (std::size_t i = 0; i < ab.size(); ++i) v[i] = Rat(ab[i], h.period);
        pts.push_back(std::move(v));
    }
    return make_polytope(2 * genus, std::move(pts));
}

RatPolytope class_polytope(const HorseshoeGraph& g, const SccResult& s, int cls) {
    if (cls < 0 || cls >= static_cast<int>(s.members.size()))
        throw std::out_of_range("class_polytope: component id out of range");
    std::vector<RatVec> pts;
    for (int v : s.members[cls]) {
        RatPolytope pv = rot_vertex(g.horseshoes[static_cast<std::size_t>(v)], g.genus);
        pts.insert(pts.end(), pv.verts.begin(), pv.verts.end());
    }
    return make_polytope(2 * g.genus, std::move(pts));
}

std::vector<RatPolytope> rot_graph(const HorseshoeGraph& g, const SccResult& s) {
    const int m = static_cast<int>(s.members.size());
    if (m > 20) throw std::runtime_error("rot_graph: too many components");
    if (m == 0) return {};

    std::vector<RatPolytope> cls_poly(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) cls_poly[static_cast<std::size_t>(c)] = class_polytope(g, s, c);

    auto reach = condensation_reach(s);

    // Cover relations of the reachability order; maximal chains are exactly
    // the source-to-sink paths of this Hasse diagram, and every chain is a
    // subchain of a maximal one, so their hulls already cover the union.
    std::vector<std::vector<int>> cover(static_cast<std::size_t>(m));
    std::vector<bool> has_pred(static_cast<std::size_t>(m), false);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a == b || !reach[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < m && direct; ++c)
                if (c != a && c != b && reach[a][c] && reach[c][b]) direct = false;
            if (direct) {
                cover[static_cast<std::size_t>(a)].push_back(b);
                has_pred[static_cast<std::size_t>(b)] = true;
            }
        }
    }

    const std::size_t chain_cap = std::size_t{1} << m;
    std::vector<std::vector<int>> chains;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (cover[static_cast<std::size_t>(v)].empty()) {
            if (chains.size() >= chain_cap)
                throw std::runtime_error("rot_graph: chain count exceeds cap");
            chains.push_back(path);
        } else {
            for (int w : cover[static_cast<std::size_t>(v)]) self(self, w);
        }
        path.pop_back();
    };
    for (int v = 0; v < m; ++v)
        if (!has_pred[static_cast<std::size_t>(v)]) dfs(dfs, v);

    // Hull per chain, with a cheap set-level dedup before the LP pass.
    std::set<std::vector<RatVec>> seen;
    std::vector<RatPolytope> pieces;
    for (const std::vector<int>& ch : chains) {
        std::vector<RatVec> pts;
        for (int c : ch) {
            const RatPolytope& cp = cls_poly[static_cast<std::size_t>(c)];
            pts.insert(pts.end(), cp.verts.begin(), cp.verts.end());
        }
        std::sort(pts.begin(), pts.end(), vec_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (!seen.insert(pts).second) continue;
        pieces.push_back(make_polytope(2 * g.genus, std::move(pts)));
    }

    // Drop pieces absorbed by another; on equality keep the earlier one.
    std::vector<bool> dead(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j || dead[j] || dead[i]) continue;
            if (polytope_equal(pieces[i], pieces[j])) {
                dead[std::max(i, j)] = true;
            } else if (polytope_subset(pieces[i], pieces[j])) {
                dead[i] = true;
            }
        }
    }
    std::vector<RatPolytope> out;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!dead[i]) out.push_back(std::move(pieces[i]));
    std::sort(out.begin(), out.end(), [](const RatPolytope& a, const RatPolytope& b) {
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return std::lexicographical_compare(a.verts.begin(), a.verts.end(),
                                            b.verts.begin(), b.verts.end(), vec_less);
    });
    return out;
}

bool rot_contains(const std::vector<RatPolytope>& pieces, const RatVec& p) {
    for (const RatPolytope& P : pieces)
        if (polytope_contains(P, p)) return true;
    return false;
}

int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    const std::size_t d = pts[0].size();
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(vec_sub(pts[i], pts[0]));
    // Exact Gaussian elimination for the rank.
    int rank = 0;
    std::size_t col = 0;
    while (col < d && rank < static_cast<int>(rows.size())) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
            for (std::size_t c = col; c < d; ++c)
                rows[r][c] -= f * rows[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
        ++col;
    }
    return rank;
}

ShapeDiagnostics shape_diagnostics(const HorseshoeGraph& g, const SccResult& s,
                                   const std::vector<RatPolytope>& pieces) {
    ShapeDiagnostics d;
    const int m = static_cast<int>(s.members.size());
    RatVec zero(static_cast<std::size_t>(2 * g.genus), Rat(0));
    for (int c = 0; c < m; ++c) {
        RatPolytope cp = class_polytope(g, s, c);
        if (cp.verts.size() <= 1) continue;
        d.chaotic_classes.push_back(c);
        if (!polytope_contains(cp, zero)) d.classes_missing_zero.push_back(c);
    }
    d.chaotic_bound_ok =
        static_cast<int>(d.chaotic_classes.size()) <= 2 * g.genus - 2;
    d.zero_in_set = rot_contains(pieces, zero);
    std::vector<RatVec> all;
    for (const RatPolytope& P : pieces) all.insert(all.end(), P.verts.begin(), P.verts.end());
    d.span_dim = all.empty() ? -1 : affine_dim(all);
    return d;
}

Polygon project2d(const RatPolytope& P, int ci, int cj) {
    if (ci < 0 || cj < 0 || ci >= P.dim || cj >= P.dim || ci == cj)
        throw std::invalid_argument("project2d: bad coordinate pair");
    std::vector<P2> pts;
    pts.reserve(P.verts.size());
    for (const RatVec& v : P.verts)
        pts.push_back(P2{v[static_cast<std::size_t>(ci)], v[static_cast<std::size_t>(cj)]});
    std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    // Monotone chain, collinear points dropped.
    auto build = [&](std::vector<P2>& out, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (out.size() >= 2 && orient(out[out.size() - 2], out.back(), *it) <= 0)
                out.pop_back();
            out.push_back(*it);
        }
    };
    std::vector<P2> lower, upper;
    build(lower, pts.begin(), pts.end());
    build(upper, pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace hn
