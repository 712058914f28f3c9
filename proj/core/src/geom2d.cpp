#include "hn/geom2d.hpp"

#include <algorithm>
#include <stdexcept>

namespace hn {

int orient(const P2& a, const P2& b, const P2& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const P2& a, const P2& b, const P2& c) {
    if (orient(a, b, c) != 0) return false;
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

bool segments_intersect(const P2& a, const P2& b, const P2& c, const P2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

Rat polygon_area2(const Polygon& poly) {
    Rat s = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

bool polygon_is_simple(const Polygon& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const P2& a = poly[i];
        const P2& b = poly[(i + 1) % n];
        if (a == b) return false;
        for (size_t j = i + 1; j < n; ++j) {
            const P2& c = poly[j];
            const P2& d = poly[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Consecutive edges may only share their common vertex.
                const P2& shared = (j == i + 1) ? b : a;
                const P2& far1 = (j == i + 1) ? a : b;
                const P2& far2 = (j == i + 1) ? d : c;
                if (on_segment(shared, far2, far1) || on_segment(shared, far1, far2))
                    return false;
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

int point_in_polygon(const Polygon& poly, const P2& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return 0;
    // Crossing parity of the horizontal ray to the right of p.
    bool in = false;
    for (size_t i = 0; i < n; ++i) {
        const P2& a = poly[i];
        const P2& b = poly[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        // x coordinate of the edge at height p.y, exact.
        Rat t = (p.y - a.y) / (b.y - a.y);
        Rat x = a.x + t * (b.x - a.x);
        if (x > p.x) in = !in;
    }
    return in ? 1 : -1;
}

BBox polygon_bbox(const Polygon& poly) {
    if (poly.empty()) throw std::invalid_argument("bbox of an empty polygon");
    BBox b{poly[0].x, poly[0].x, poly[0].y, poly[0].y};
    for (const P2& p : poly) {
        b.xlo = std::min(b.xlo, p.x);
        b.xhi = std::max(b.xhi, p.x);
        b.ylo = std::min(b.ylo, p.y);
        b.yhi = std::max(b.yhi, p.y);
    }
    return b;
}

bool bbox_overlap(const BBox& a, const BBox& b) {
    return a.xlo <= b.xhi && b.xlo <= a.xhi && a.ylo <= b.yhi && b.ylo <= a.yhi;
}

namespace {

struct Chain {
    std::vector<P2> pts;
    int entry_cut = -1;   // index into the sorted cut points where the chain starts
    int exit_cut = -1;    // where it ends
};

}  // namespace

std::vector<Polygon> clip_halfplane(const Polygon& poly, const Rat& a, const Rat& b,
                                    const Rat& c) {
    size_t n = poly.size();
    if (n < 3) return {};
    auto val = [&](const P2& p) { return a * p.x + b * p.y; };
    std::vector<Rat> v(n);
    bool any_in = false, any_out = false;
    for (size_t i = 0; i < n; ++i) {
        v[i] = val(poly[i]);
        (v[i] <= c ? any_in : any_out) = true;
    }
    if (!any_out) return {poly};
    if (!any_in) return {};

    // Cut the boundary into maximal chains of inside vertices, recording the
    // entry and exit points on the cut line.
    size_t start = 0;
    while (!(v[start] <= c && v[(start + n - 1) % n] > c)) {
        ++start;
        if (start == n) throw std::runtime_error("clip: no entry vertex found");
    }
    struct RawChain {
        P2 entry, exit;
        std::vector<P2> pts;
    };
    std::vector<RawChain> chains;
    RawChain cur;
    auto cross_point = [&](size_t i, size_t j) {
        Rat t = (c - v[i]) / (v[j] - v[i]);
        return P2{poly[i].x + t * (poly[j].x - poly[i].x),
                  poly[i].y + t * (poly[j].y - poly[i].y)};
    };
    cur.entry = cross_point((start + n - 1) % n, start);
    bool inside = true;
    for (size_t k = 0; k <= n; ++k) {
        size_t i = (start + k) % n;
        if (k == n) break;
        if (inside) {
            if (v[i] <= c) {
                cur.pts.push_back(poly[i]);
            } else {
                size_t prev = (i + n - 1) % n;
                cur.exit = cross_point(prev, i);
                chains.push_back(cur);
                cur = RawChain{};
                inside = false;
            }
        }
        if (!inside && v[i] <= c) {
            size_t prev = (i + n - 1) % n;
            cur.entry = cross_point(prev, i);
            cur.pts.push_back(poly[i]);
            inside = true;
        }
    }
    if (inside) {
        cur.exit = cross_point((start + n - 1) % n, start);
        chains.push_back(cur);
    }

    // Tangential contacts: a chain that enters and leaves at the same point
    // either is an isolated touch point (dropped) or closes on its own.
    std::vector<Polygon> out;
    {
        std::vector<RawChain> kept;
        for (RawChain& ch : chains) {
            if (!(ch.entry == ch.exit)) {
                kept.push_back(std::move(ch));
                continue;
            }
            if (ch.pts.size() <= 1) continue;
            Polygon piece;
            piece.push_back(ch.entry);
            for (const P2& p : ch.pts)
                if (!(piece.back() == p)) piece.push_back(p);
            while (piece.size() > 1 && piece.front() == piece.back()) piece.pop_back();
            if (piece.size() >= 3 && polygon_area2(piece) != 0) out.push_back(piece);
        }
        chains.swap(kept);
    }
    if (chains.empty()) return out;

    // Sort the cut points along the line direction (-b, a); inside intervals
    // alternate, and each runs from an exit point to the next entry point.
    struct CutPt {
        Rat pos;
        int chain;
        bool is_entry;
    };
    std::vector<CutPt> cuts;
    auto line_pos = [&](const P2& p) { return -b * p.x + a * p.y; };
    for (size_t k = 0; k < chains.size(); ++k) {
        cuts.push_back({line_pos(chains[k].entry), static_cast<int>(k), true});
        cuts.push_back({line_pos(chains[k].exit), static_cast<int>(k), false});
    }
    std::sort(cuts.begin(), cuts.end(), [](const CutPt& x, const CutPt& y) {
        if (x.pos != y.pos) return x.pos < y.pos;
        return x.is_entry < y.is_entry;
    });
    // next_chain[k]: chain whose entry follows chain k's exit along the line.
    std::vector<int> next_chain(chains.size(), -1);
    for (size_t t = 0; t + 1 < cuts.size(); t += 2) {
        const CutPt& q1 = cuts[t];
        const CutPt& q2 = cuts[t + 1];
        if (q1.is_entry || !q2.is_entry)
            throw std::runtime_error("clip: degenerate cut configuration");
        next_chain[q1.chain] = q2.chain;
    }

    std::vector<bool> used(chains.size(), false);
    for (size_t k = 0; k < chains.size(); ++k) {
        if (used[k]) continue;
        Polygon piece;
        int cu = static_cast<int>(k);
        while (!used[cu]) {
            used[cu] = true;
            piece.push_back(chains[cu].entry);
            for (const P2& p : chains[cu].pts) piece.push_back(p);
            piece.push_back(chains[cu].exit);
            cu = next_chain[cu];
            if (cu < 0) throw std::runtime_error("clip: unmatched chain");
        }
        // Drop duplicate consecutive points (touching cut points).
        Polygon clean;
        for (const P2& p : piece)
            if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
        while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
        if (clean.size() >= 3 && polygon_area2(clean) != 0) out.push_back(clean);
    }
    return out;
}

std::vector<Polygon> clip_band(const Polygon& poly, const Rat& ylo, const Rat& yhi) {
    std::vector<Polygon> tops = clip_halfplane(poly, Rat(0), Rat(1), yhi);
    std::vector<Polygon> out;
    for (const Polygon& piece : tops) {
        // y >= ylo  <=>  -y <= -ylo
        for (Polygon& q : clip_halfplane(piece, Rat(0), Rat(-1), -ylo)) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace hn
