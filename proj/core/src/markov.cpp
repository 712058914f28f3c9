#include "hn/markov.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hn {

namespace {

Rat cross2(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }
P2 sub(const P2& a, const P2& b) { return {a.x - b.x, a.y - b.y}; }

Polygon triangle_polygon(const std::array<P2, 3>& t) { return {t[0], t[1], t[2]}; }

// Intersection of two polygons has positive area.  Both simple; b must be
// convex and ccw (clipping by its edge halfplanes).
bool interiors_overlap(const Polygon& a, const Polygon& b) {
    std::vector<Polygon> cur{a};
    size_t nb = b.size();
    for (size_t i = 0; i < nb && !cur.empty(); ++i) {
        const P2& p = b[i];
        const P2& q = b[(i + 1) % nb];
        // left of pq: (q.y-p.y)*x - (q.x-p.x)*y <= (q.y-p.y)*p.x - (q.x-p.x)*p.y
        Rat ca = q.y - p.y;
        Rat cb = p.x - q.x;
        Rat cc = ca * p.x + cb * p.y;
        std::vector<Polygon> next;
        for (const Polygon& piece : cur)
            for (Polygon& out : clip_halfplane(piece, ca, cb, cc)) next.push_back(std::move(out));
        cur.swap(next);
    }
    for (const Polygon& piece : cur)
        if (polygon_area2(piece) != 0) return true;
    return false;
}

PLRectangle reverse_rectangle(const PLRectangle& r) {
    int n = static_cast<int>(r.poly.size());
    PLRectangle out;
    out.poly.reserve(r.poly.size());
    for (int i = n - 1; i >= 0; --i) out.poly.push_back(r.poly[i]);
    out.corner = {n - 1 - r.corner[1], n - 1 - r.corner[0], n - 1 - r.corner[3],
                  n - 1 - r.corner[2]};
    return out;
}

}  // namespace

void validate_rectangle(const PLRectangle& r) {
    int n = static_cast<int>(r.poly.size());
    if (n < 4) throw std::invalid_argument("rectangle: fewer than 4 vertices");
    if (!polygon_is_simple(r.poly)) throw std::invalid_argument("rectangle: polygon not simple");
    if (polygon_area2(r.poly) <= 0)
        throw std::invalid_argument("rectangle: polygon must be ccw oriented");
    int sum = 0;
    for (int k = 0; k < 4; ++k) {
        int c = r.corner[k];
        if (c < 0 || c >= n) throw std::invalid_argument("rectangle: corner index out of range");
        int gap = (r.corner[(k + 1) % 4] - c + n) % n;
        if (gap == 0) throw std::invalid_argument("rectangle: repeated corner");
        sum += gap;
    }
    if (sum != n) throw std::invalid_argument("rectangle: corners not in cyclic order");
}

std::vector<int> arc_indices(const PLRectangle& r, int arc) {
    int n = static_cast<int>(r.poly.size());
    std::vector<int> out;
    int i = r.corner[arc % 4];
    int stop = r.corner[(arc + 1) % 4];
    out.push_back(i);
    while (i != stop) {
        i = (i + 1) % n;
        out.push_back(i);
    }
    return out;
}

bool is_unit_square(const PLRectangle& r) {
    if (r.poly.size() != 4) return false;
    const P2 sq[4] = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    int k = -1;
    for (int i = 0; i < 4; ++i)
        if (r.poly[i] == sq[0]) k = i;
    if (k < 0) return false;
    for (int i = 0; i < 4; ++i)
        if (!(r.poly[(k + i) % 4] == sq[i])) return false;
    for (int i = 0; i < 4; ++i)
        if (r.corner[i] != (k + i) % 4) return false;
    return true;
}

BoxTransform unit_square_transform(const PLRectangle& r2) {
    validate_rectangle(r2);
    if (r2.poly.size() != 4)
        throw std::invalid_argument("normalize: rectangle is not an axis-aligned quad");
    const P2& p0 = r2.poly[r2.corner[0]];
    const P2& p1 = r2.poly[r2.corner[1]];
    const P2& p2 = r2.poly[r2.corner[2]];
    const P2& p3 = r2.poly[r2.corner[3]];
    bool ok = p0.y == p1.y && p2.y == p3.y && p1.x == p2.x && p3.x == p0.x && p0.x < p1.x &&
              p0.y < p2.y;
    if (!ok) throw std::invalid_argument("normalize: rectangle is not axis-aligned");
    BoxTransform t;
    t.sx = Rat(1) / (p1.x - p0.x);
    t.tx = -p0.x * t.sx;
    t.sy = Rat(1) / (p2.y - p0.y);
    t.ty = -p0.y * t.sy;
    return t;
}

P2 apply(const BoxTransform& t, const P2& p) { return {t.sx * p.x + t.tx, t.sy * p.y + t.ty}; }

PLRectangle apply(const BoxTransform& t, const PLRectangle& r) {
    PLRectangle out;
    out.poly.reserve(r.poly.size());
    for (const P2& p : r.poly) out.poly.push_back(apply(t, p));
    out.corner = r.corner;
    return out;
}

bool is_pre_markovian(const PLRectangle& r1, const PLRectangle& r2) {
    validate_rectangle(r1);
    validate_rectangle(r2);
    if (!is_unit_square(r2))
        throw std::invalid_argument("is_pre_markovian: r2 must be the unit square");
    bool bot_below = true, bot_above = true, top_below = true, top_above = true;
    for (int i : arc_indices(r1, 0)) {
        bot_below = bot_below && r1.poly[i].y < 0;
        bot_above = bot_above && r1.poly[i].y > 1;
    }
    for (int i : arc_indices(r1, 2)) {
        top_below = top_below && r1.poly[i].y < 0;
        top_above = top_above && r1.poly[i].y > 1;
    }
    if (!((bot_below && top_above) || (bot_above && top_below))) return false;
    for (const Polygon& piece : clip_band(r1.poly, Rat(0), Rat(1)))
        for (const P2& v : piece)
            if (v.x < 0 || v.x > 1) return false;
    return true;
}

std::optional<PLRectangle> is_markovian(const PLRectangle& r1, const PLRectangle& r2) {
    validate_rectangle(r1);
    validate_rectangle(r2);
    if (!is_unit_square(r2))
        throw std::invalid_argument("is_markovian: r2 must be the unit square");
    if (is_pre_markovian(r1, r2)) return r1;

    std::vector<Polygon> band = clip_band(r1.poly, Rat(0), Rat(1));
    std::vector<const Polygon*> spanning;
    for (const Polygon& piece : band) {
        bool lo = false, hi = false, inside = true;
        for (const P2& v : piece) {
            lo = lo || v.y == 0;
            hi = hi || v.y == 1;
            inside = inside && v.x >= 0 && v.x <= 1;
        }
        if (lo && hi && inside) spanning.push_back(&piece);
    }
    if (spanning.empty()) return std::nullopt;

    // Clearance of r1's material beyond both band lines; the cross cuts sit
    // at half of the smaller clearance, so no vertex lies between a band
    // line and its cut line.
    std::optional<Rat> below, above;
    for (const P2& v : r1.poly) {
        if (v.y < 0 && (!below || -v.y < *below)) below = -v.y;
        if (v.y > 1 && (!above || v.y - 1 < *above)) above = v.y - 1;
    }
    if (!below || !above) return std::nullopt;
    Rat delta = std::min(*below, *above) / 2;

    std::vector<Polygon> ext = clip_band(r1.poly, -delta, Rat(1) + delta);
    for (const Polygon* comp : spanning) {
        const Polygon* wpoly = nullptr;
        for (const Polygon& cand : ext) {
            bool contains = true;
            for (const P2& v : *comp)
                if (point_in_polygon(cand, v) < 0) {
                    contains = false;
                    break;
                }
            if (contains) {
                wpoly = &cand;
                break;
            }
        }
        if (!wpoly) continue;
        int n = static_cast<int>(wpoly->size());
        auto cut_pair = [&](const Rat& level) -> std::optional<std::pair<int, int>> {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if ((*wpoly)[i].y == level) idx.push_back(i);
            if (idx.size() != 2) return std::nullopt;
            if ((idx[0] + 1) % n == idx[1]) return std::make_pair(idx[0], idx[1]);
            if ((idx[1] + 1) % n == idx[0]) return std::make_pair(idx[1], idx[0]);
            return std::nullopt;
        };
        auto lo = cut_pair(-delta);
        auto hi = cut_pair(Rat(1) + delta);
        if (!lo || !hi) continue;
        PLRectangle witness;
        witness.poly = *wpoly;
        witness.corner = {lo->first, lo->second, hi->first, hi->second};
        try {
            validate_rectangle(witness);
        } catch (const std::invalid_argument&) {
            continue;
        }
        return witness;
    }
    return std::nullopt;
}

Rat perturbation_margin(const PLRectangle& r1, const PLRectangle& r2) {
    std::optional<PLRectangle> w = is_markovian(r1, r2);
    if (!w) throw std::invalid_argument("perturbation_margin: intersection is not Markovian");

    auto arc_min_y = [&](int arc) {
        std::optional<Rat> m;
        for (int i : arc_indices(*w, arc)) {
            const Rat& y = w->poly[i].y;
            if (!m || y < *m) m = y;
        }
        return *m;
    };
    auto arc_max_y = [&](int arc) {
        std::optional<Rat> m;
        for (int i : arc_indices(*w, arc)) {
            const Rat& y = w->poly[i].y;
            if (!m || y > *m) m = y;
        }
        return *m;
    };
    int above_arc = arc_min_y(2) > 1 ? 2 : 0;
    int below_arc = above_arc == 2 ? 0 : 2;
    Rat top_clear = arc_min_y(above_arc) - 1;
    Rat bottom_clear = -arc_max_y(below_arc);

    std::optional<Rat> xlo, xhi;
    for (const Polygon& piece : clip_band(w->poly, Rat(0), Rat(1)))
        for (const P2& v : piece) {
            if (!xlo || v.x < *xlo) xlo = v.x;
            if (!xhi || v.x > *xhi) xhi = v.x;
        }
    Rat left_clear = *xlo;
    Rat right_clear = Rat(1) - *xhi;
    return std::min(std::min(top_clear, bottom_clear), std::min(left_clear, right_clear));
}

P2 apply(const AffineMap& m, const P2& p) {
    return {m.a * p.x + m.b * p.y + m.tx, m.c * p.x + m.d * p.y + m.ty};
}

void validate_map(PLMap& f) {
    if (f.pieces.empty()) throw std::invalid_argument("map: empty domain");
    for (PLTriangle& t : f.pieces) {
        int o = orient(t.dom[0], t.dom[1], t.dom[2]);
        if (o == 0) throw std::invalid_argument("map: degenerate domain triangle");
        if (o < 0) std::swap(t.dom[1], t.dom[2]);
        if (t.map.a * t.map.d - t.map.b * t.map.c == 0)
            throw std::invalid_argument("map: degenerate affine piece");
    }
    size_t m = f.pieces.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            Polygon ti = triangle_polygon(f.pieces[i].dom);
            Polygon tj = triangle_polygon(f.pieces[j].dom);
            if (interiors_overlap(ti, tj))
                throw std::invalid_argument("map: domain triangles overlap");
            // Continuity at boundary contacts: affine maps agree wherever a
            // vertex of one triangle touches the other.
            for (const P2& v : f.pieces[i].dom)
                if (point_in_polygon(tj, v) >= 0 &&
                    !(apply(f.pieces[i].map, v) == apply(f.pieces[j].map, v)))
                    throw std::invalid_argument("map: discontinuous across shared boundary");
            for (const P2& v : f.pieces[j].dom)
                if (point_in_polygon(ti, v) >= 0 &&
                    !(apply(f.pieces[i].map, v) == apply(f.pieces[j].map, v)))
                    throw std::invalid_argument("map: discontinuous across shared boundary");
        }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            std::array<P2, 3> ai, aj;
            for (int k = 0; k < 3; ++k) {
                ai[k] = apply(f.pieces[i].map, f.pieces[i].dom[k]);
                aj[k] = apply(f.pieces[j].map, f.pieces[j].dom[k]);
            }
            if (orient(ai[0], ai[1], ai[2]) < 0) std::swap(ai[1], ai[2]);
            if (orient(aj[0], aj[1], aj[2]) < 0) std::swap(aj[1], aj[2]);
            if (interiors_overlap(triangle_polygon(ai), triangle_polygon(aj)))
                throw std::invalid_argument("map: not injective (image triangles overlap)");
        }
}

bool in_domain(const PLMap& f, const P2& p) {
    for (const PLTriangle& t : f.pieces)
        if (point_in_polygon(triangle_polygon(t.dom), p) >= 0) return true;
    return false;
}

P2 apply(const PLMap& f, const P2& p) {
    for (const PLTriangle& t : f.pieces)
        if (point_in_polygon(triangle_polygon(t.dom), p) >= 0) return apply(t.map, p);
    throw std::invalid_argument("map: point outside domain");
}

Polygon map_polygon(const PLMap& f, const Polygon& poly) {
    size_t n = poly.size();
    Polygon out;
    for (size_t i = 0; i < n; ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % n];
        P2 r = sub(q, p);
        std::vector<Rat> ts{Rat(0)};
        for (const PLTriangle& t : f.pieces)
            for (int e = 0; e < 3; ++e) {
                const P2& u = t.dom[e];
                const P2& w = t.dom[(e + 1) % 3];
                P2 s = sub(w, u);
                Rat denom = cross2(r, s);
                if (denom == 0) continue;
                P2 up = sub(u, p);
                Rat tt = cross2(up, s) / denom;
                Rat ss = cross2(up, r) / denom;
                if (tt > 0 && tt < 1 && ss >= 0 && ss <= 1) ts.push_back(tt);
            }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (const Rat& t : ts) out.push_back(apply(f, P2{p.x + t * r.x, p.y + t * r.y}));
    }
    return out;
}

PLRectangle map_rectangle(const PLMap& f, const PLRectangle& r) {
    validate_rectangle(r);
    size_t n = r.poly.size();
    PLRectangle out;
    std::array<int, 4> newc{};
    for (size_t i = 0; i < n; ++i) {
        const P2& p = r.poly[i];
        const P2& q = r.poly[(i + 1) % n];
        for (int k = 0; k < 4; ++k)
            if (r.corner[k] == static_cast<int>(i)) newc[k] = static_cast<int>(out.poly.size());
        P2 rr = sub(q, p);
        std::vector<Rat> ts{Rat(0)};
        for (const PLTriangle& t : f.pieces)
            for (int e = 0; e < 3; ++e) {
                const P2& u = t.dom[e];
                const P2& w = t.dom[(e + 1) % 3];
                P2 s = sub(w, u);
                Rat denom = cross2(rr, s);
                if (denom == 0) continue;
                P2 up = sub(u, p);
                Rat tt = cross2(up, s) / denom;
                Rat ss = cross2(up, rr) / denom;
                if (tt > 0 && tt < 1 && ss >= 0 && ss <= 1) ts.push_back(tt);
            }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (const Rat& t : ts)
            out.poly.push_back(apply(f, P2{p.x + t * rr.x, p.y + t * rr.y}));
    }
    out.corner = newc;
    if (polygon_area2(out.poly) < 0) out = reverse_rectangle(out);
    validate_rectangle(out);
    return out;
}

namespace {

struct Box {
    Rat x0, x1, y0, y1;
};

std::vector<Polygon> clip_box(const Polygon& poly, const Box& b) {
    std::vector<Polygon> cur{poly};
    auto step = [&](const Rat& a, const Rat& bb, const Rat& c) {
        std::vector<Polygon> next;
        for (const Polygon& piece : cur)
            for (Polygon& q : clip_halfplane(piece, a, bb, c)) next.push_back(std::move(q));
        cur.swap(next);
    };
    step(Rat(1), Rat(0), b.x1);
    step(Rat(-1), Rat(0), -b.x0);
    step(Rat(0), Rat(1), b.y1);
    step(Rat(0), Rat(-1), -b.y0);
    return cur;
}

std::optional<Box> pieces_box(const std::vector<Polygon>& pieces) {
    std::optional<Box> out;
    for (const Polygon& piece : pieces)
        for (const P2& v : piece) {
            if (!out) {
                out = Box{v.x, v.x, v.y, v.y};
            } else {
                out->x0 = std::min(out->x0, v.x);
                out->x1 = std::max(out->x1, v.x);
                out->y0 = std::min(out->y0, v.y);
                out->y1 = std::max(out->y1, v.y);
            }
        }
    return out;
}

// Over-approximation of the reachable image boxes; never prunes a box that
// contains an admissible point.
bool chain_feasible(const Box& box, const std::vector<PLRectangle>& rects,
                    const std::vector<PLMap>& maps, bool closed, const Rat& tol) {
    std::vector<Polygon> pieces = clip_box(rects[0].poly, box);
    std::optional<Box> cur = pieces_box(pieces);
    if (!cur) return false;
    for (size_t i = 0; i < maps.size(); ++i) {
        std::optional<Box> img;
        for (const PLTriangle& t : maps[i].pieces) {
            for (const Polygon& part : clip_box(triangle_polygon(t.dom), *cur))
                for (const P2& v : part) {
                    P2 w = apply(t.map, v);
                    if (!img) {
                        img = Box{w.x, w.x, w.y, w.y};
                    } else {
                        img->x0 = std::min(img->x0, w.x);
                        img->x1 = std::max(img->x1, w.x);
                        img->y0 = std::min(img->y0, w.y);
                        img->y1 = std::max(img->y1, w.y);
                    }
                }
        }
        if (!img) return false;
        cur = pieces_box(clip_box(rects[i + 1].poly, *img));
        if (!cur) return false;
    }
    if (closed) {
        Rat gx = std::max(std::max(box.x0 - cur->x1, cur->x0 - box.x1), Rat(0));
        Rat gy = std::max(std::max(box.y0 - cur->y1, cur->y0 - box.y1), Rat(0));
        if (std::max(gx, gy) > tol) return false;
    }
    return true;
}

std::optional<P2> chain_admissible(const P2& c, const std::vector<PLRectangle>& rects,
                                   const std::vector<PLMap>& maps, bool closed, const Rat& tol) {
    if (point_in_polygon(rects[0].poly, c) != 1) return std::nullopt;
    P2 p = c;
    for (size_t i = 0; i < maps.size(); ++i) {
        if (!in_domain(maps[i], p)) return std::nullopt;
        p = apply(maps[i], p);
        if (point_in_polygon(rects[i + 1].poly, p) != 1) return std::nullopt;
    }
    if (closed) {
        Rat dx = p.x - c.x;
        Rat dy = p.y - c.y;
        if (dx * dx + dy * dy > tol * tol) return std::nullopt;
    }
    return c;
}

AffineMap compose_affine(const AffineMap& g, const AffineMap& f) {
    return {g.a * f.a + g.b * f.c,          g.a * f.b + g.b * f.d,
            g.c * f.a + g.d * f.c,          g.c * f.b + g.d * f.d,
            g.a * f.tx + g.b * f.ty + g.tx, g.c * f.tx + g.d * f.ty + g.ty};
}

Box affine_box_image(const AffineMap& m, const Box& b) {
    std::optional<Box> out;
    for (const Rat& x : {b.x0, b.x1})
        for (const Rat& y : {b.y0, b.y1}) {
            P2 w = apply(m, P2{x, y});
            if (!out) {
                out = Box{w.x, w.x, w.y, w.y};
            } else {
                out->x0 = std::min(out->x0, w.x);
                out->x1 = std::max(out->x1, w.x);
                out->y0 = std::min(out->y0, w.y);
                out->y1 = std::max(out->y1, w.y);
            }
        }
    return *out;
}

std::optional<Box> box_meet(const Box& a, const Box& b) {
    Box m{std::max(a.x0, b.x0), std::min(a.x1, b.x1), std::max(a.y0, b.y0),
          std::min(a.y1, b.y1)};
    if (m.x0 > m.x1 || m.y0 > m.y1) return std::nullopt;
    return m;
}

// A closed chain pins one affine piece per step, so each branch sequence can
// contribute at most one point: the exact fixed point of its composition.
// Reachability boxes prune sequences whose domains cannot connect; the final
// admissibility re-check does not depend on that pruning.
void branch_fixed_points(std::size_t step, const std::vector<PLRectangle>& rects,
                         const std::vector<PLMap>& maps, const Box& reach, const AffineMap& acc,
                         std::vector<P2>& out) {
    if (step == maps.size()) {
        Rat det = (acc.a - 1) * (acc.d - 1) - acc.b * acc.c;
        if (det == 0) return;
        out.push_back(P2{(acc.b * acc.ty - acc.tx * (acc.d - 1)) / det,
                         (acc.c * acc.tx - (acc.a - 1) * acc.ty) / det});
        return;
    }
    for (const PLTriangle& t : maps[step].pieces) {
        BBox db = polygon_bbox(triangle_polygon(t.dom));
        std::optional<Box> cur = box_meet(reach, Box{db.xlo, db.xhi, db.ylo, db.yhi});
        if (!cur) continue;
        BBox rb = polygon_bbox(rects[step + 1].poly);
        std::optional<Box> next =
            box_meet(affine_box_image(t.map, *cur), Box{rb.xlo, rb.xhi, rb.ylo, rb.yhi});
        if (!next) continue;
        branch_fixed_points(step + 1, rects, maps, *next, compose_affine(t.map, acc), out);
    }
}

std::optional<P2> chain_search(const Box& box, int depth, int max_depth,
                               const std::vector<PLRectangle>& rects,
                               const std::vector<PLMap>& maps, bool closed, const Rat& tol) {
    if (!chain_feasible(box, rects, maps, closed, tol)) return std::nullopt;
    Rat mx = (box.x0 + box.x1) / 2;
    Rat my = (box.y0 + box.y1) / 2;
    if (auto hit = chain_admissible(P2{mx, my}, rects, maps, closed, tol)) return hit;
    if (depth >= max_depth) return std::nullopt;
    Box kids[4] = {{box.x0, mx, box.y0, my},
                   {mx, box.x1, box.y0, my},
                   {box.x0, mx, my, box.y1},
                   {mx, box.x1, my, box.y1}};
    for (const Box& k : kids)
        if (auto hit = chain_search(k, depth + 1, max_depth, rects, maps, closed, tol)) return hit;
    return std::nullopt;
}

}  // namespace

P2 chain_point(const std::vector<PLRectangle>& rects, const std::vector<PLMap>& maps,
               const ChainOptions& opt) {
    if (rects.size() < 2 || maps.size() + 1 != rects.size())
        throw std::invalid_argument("chain_point: need n+1 rectangles and n maps");
    for (const PLRectangle& r : rects) validate_rectangle(r);
    std::vector<PLMap> fs = maps;
    for (PLMap& f : fs) validate_map(f);

    if (opt.verify_markov) {
        for (size_t i = 0; i < fs.size(); ++i) {
            PLRectangle img = map_rectangle(fs[i], rects[i]);
            PLRectangle tgt = rects[i + 1];
            if (!is_unit_square(tgt)) {
                BoxTransform t = unit_square_transform(tgt);
                img = apply(t, img);
                tgt = apply(t, tgt);
            }
            if (!is_markovian(img, tgt))
                throw std::invalid_argument("chain_point: link " + std::to_string(i + 1) +
                                            " is not Markovian");
        }
    }

    bool closed = rects.front() == rects.back();
    Rat tol(opt.tol);
    BBox bb = polygon_bbox(rects[0].poly);
    Box root{bb.xlo, bb.xhi, bb.ylo, bb.yhi};
    if (closed) {
        // The quadtree cannot prune along expanding directions, so solve the
        // per-branch affine fixed points exactly first; it stays as the
        // fallback for singular compositions and boundary candidates.
        std::vector<P2> cands;
        branch_fixed_points(0, rects, fs, root,
                            AffineMap{Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}, cands);
        for (const P2& c : cands)
            if (auto hit = chain_admissible(c, rects, fs, closed, tol)) return *hit;
    }
    if (auto hit = chain_search(root, 0, opt.max_depth, rects, fs, closed, tol)) return *hit;
    throw std::runtime_error("chain_point: search exhausted without an admissible point");
}

}  // namespace hn
