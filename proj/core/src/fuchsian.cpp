#include "hn/fuchsian.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hn {

namespace {

using Cx = std::complex<double>;

// Element of SU(1,1): the matrix [a, b; conj(b), conj(a)], det |a|^2-|b|^2.
struct SU11 {
    Cx a{1.0, 0.0};
    Cx b{0.0, 0.0};
};

SU11 su_mul(const SU11& x, const SU11& y) {
    SU11 r;
    r.a = x.a * y.a + x.b * std::conj(y.b);
    r.b = x.a * y.b + x.b * std::conj(y.a);
    double d = std::sqrt(std::norm(r.a) - std::norm(r.b));
    r.a /= d;
    r.b /= d;
    return r;
}

SU11 su_inv(const SU11& x) {
    double s = std::sqrt(std::norm(x.a) - std::norm(x.b));
    return {std::conj(x.a) / s, -x.b / s};
}

Cx su_apply(const SU11& x, Cx z) { return (x.a * z + x.b) / (std::conj(x.b) * z + std::conj(x.a)); }

SU11 su_rot(double phi) { return {std::polar(1.0, phi / 2.0), Cx(0.0, 0.0)}; }

SU11 su_to_zero(Cx u) {
    SU11 r{Cx(1.0, 0.0), -u};
    double d = std::sqrt(1.0 - std::norm(u));
    r.a /= d;
    r.b /= d;
    return r;
}

// Maps u to 0 and v onto the positive real axis.
SU11 su_normalizer(Cx u, Cx v) {
    SU11 m = su_to_zero(u);
    Cx vv = su_apply(m, v);
    return su_mul(su_rot(-std::arg(vv)), m);
}

// Unique isometry with (ua, ub) -> (uc, ud); the point pairs must be at the
// same hyperbolic distance.
SU11 su_pairing(Cx ua, Cx ub, Cx uc, Cx ud) {
    return su_mul(su_inv(su_normalizer(uc, ud)), su_normalizer(ua, ub));
}

// SU(1,1) -> SL(2,R) under the fixed Cayley transform w = (z - i)/(z + i).
Isometry su_to_iso(const SU11& x) {
    Isometry r;
    r.m[0][0] = x.a.real() + x.b.real();
    r.m[0][1] = x.a.imag() - x.b.imag();
    r.m[1][0] = -(x.a.imag() + x.b.imag());
    r.m[1][1] = x.a.real() - x.b.real();
    return iso_normalize(r);
}

// Disk-model action of an upper half-plane matrix, via projective pairs of
// the Cayley transform (no special casing near infinity).
Cx apply_disk(const Isometry& g, Cx w) {
    Cx zn = Cx(0.0, 1.0) * (Cx(1.0, 0.0) + w);
    Cx zd = Cx(1.0, 0.0) - w;
    Cx pn = g.m[0][0] * zn + g.m[0][1] * zd;
    Cx pd = g.m[1][0] * zn + g.m[1][1] * zd;
    return (pn - Cx(0.0, 1.0) * pd) / (pn + Cx(0.0, 1.0) * pd);
}

struct DiskGeo {
    // Geodesic as the circle |z - c| = r orthogonal to the unit circle, or a
    // diameter when `line` is set.
    bool line = false;
    Cx c{0.0, 0.0};
    double r = 0.0;
    double from = 0.0, to = 0.0;   // boundary angles, oriented
};

DiskGeo geo_from_angles(double from, double to) {
    DiskGeo g;
    g.from = from;
    g.to = to;
    double d = 1.0 + std::cos(to - from);
    if (std::fabs(d) < 1e-12) {
        g.line = true;
        return g;
    }
    g.c = (std::polar(1.0, from) + std::polar(1.0, to)) / d;
    g.r = std::sqrt(std::norm(g.c) - 1.0);
    return g;
}

// Oriented geodesic through two interior points.
DiskGeo geo_through(Cx z1, Cx z2) {
    double a11 = z1.real(), a12 = z1.imag();
    double a21 = z2.real(), a22 = z2.imag();
    double b1 = (std::norm(z1) + 1.0) / 2.0;
    double b2 = (std::norm(z2) + 1.0) / 2.0;
    double det = a11 * a22 - a12 * a21;
    if (std::fabs(det) < 1e-13 * (std::abs(z1) + std::abs(z2) + 1e-30)) {
        // Diameter through the origin.
        Cx dir = z2 - z1;
        double th = std::atan2(dir.imag(), dir.real());
        DiskGeo g;
        g.line = true;
        g.to = norm_angle(th);
        g.from = norm_angle(th + M_PI);
        return g;
    }
    double xc = (b1 * a22 - b2 * a12) / det;
    double yc = (a11 * b2 - a21 * b1) / det;
    DiskGeo g;
    g.c = Cx(xc, yc);
    g.r = std::sqrt(std::norm(g.c) - 1.0);
    double rho = std::abs(g.c), psi = std::arg(g.c);
    double half = std::acos(1.0 / rho);
    double t1 = norm_angle(psi - half), t2 = norm_angle(psi + half);
    // Order the endpoints so travel goes z1 -> z2.  The disk-interior arc
    // runs clockwise around the circle center as boundary angles increase,
    // so the point nearer t1 has the larger ccw parameter offset.
    auto param = [&](Cx z) { return std::arg(z - g.c); };
    double pa = param(std::polar(1.0, t1)), p1 = param(z1), p2 = param(z2);
    auto fwd = [&](double x) {
        double d2 = x - pa;
        while (d2 < 0) d2 += 2.0 * M_PI;
        while (d2 >= 2.0 * M_PI) d2 -= 2.0 * M_PI;
        return d2;
    };
    if (fwd(p1) > fwd(p2)) {
        g.from = t1;
        g.to = t2;
    } else {
        g.from = t2;
        g.to = t1;
    }
    return g;
}

// Signed side value, roughly the Euclidean distance from the geodesic,
// positive on the left of the oriented geodesic.
double side_value(const DiskGeo& g, Cx z) {
    if (g.line) {
        Cx a = std::polar(1.0, g.from), b = std::polar(1.0, g.to);
        Cx d = b - a, w = z - a;
        return (d.real() * w.imag() - d.imag() * w.real()) / std::abs(d);
    }
    double power = std::norm(z - g.c) - g.r * g.r;
    double v = power / (2.0 * g.r);
    double arc = ccw_gap(g.from, g.to);
    return arc < M_PI ? v : -v;
}

// Point on the geodesic, t in (0,1) sweeping from the `from` end.
Cx geo_point(const DiskGeo& g, double t) {
    Cx a = std::polar(1.0, g.from), b = std::polar(1.0, g.to);
    if (g.line) return a + t * (b - a);
    double pa = std::arg(a - g.c), pb = std::arg(b - g.c);
    double d = pb - pa;
    while (d <= -M_PI) d += 2.0 * M_PI;
    while (d > M_PI) d -= 2.0 * M_PI;
    Cx mid = g.c + std::polar(g.r, pa + 0.5 * d);
    if (std::abs(mid) >= 1.0) {
        // Wrong arc; take the complementary sweep.
        d = d > 0 ? d - 2.0 * M_PI : d + 2.0 * M_PI;
    }
    return g.c + std::polar(g.r, pa + t * d);
}

}  // namespace

Isometry FuchsianRep::letter(int s) const {
    int k = s > 0 ? s : -s;
    if (k < 1 || k > 2 * genus) throw std::invalid_argument("letter out of range");
    return s > 0 ? gens[k - 1] : iso_inverse(gens[k - 1]);
}

FuchsianRep fuchsian_representation(int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    FuchsianRep rep;
    rep.genus = genus;
    int n = 4 * genus;
    double cot = 1.0 / std::tan(M_PI / n);
    double R = std::acosh(cot * cot);
    double re = std::tanh(R / 2.0);
    rep.verts.resize(n);
    for (int j = 0; j < n; ++j)
        rep.verts[j] = std::polar(re, 2.0 * M_PI * j / n + M_PI / n);
    rep.gens.resize(2 * genus);
    rep.side_letter.assign(n, 0);
    auto V = [&](int j) { return rep.verts[((j % n) + n) % n]; };
    for (int m = 0; m < genus; ++m) {
        int ja = 4 * m, jpa = 4 * m + 2;
        SU11 A = su_pairing(V(jpa + 1), V(jpa), V(ja), V(ja + 1));
        int jb = 4 * m + 1, jpb = 4 * m + 3;
        SU11 Braw = su_pairing(V(jpb + 1), V(jpb), V(jb), V(jb + 1));
        // The vertex cycle of this pairing pattern spells prod [a_i, b_i^-1];
        // inverting the b pairing turns it into the standard relator.
        rep.gens[2 * m] = su_to_iso(A);
        rep.gens[2 * m + 1] = su_to_iso(su_inv(Braw));
        rep.side_letter[ja] = 2 * m + 1;
        rep.side_letter[jpa] = -(2 * m + 1);
        rep.side_letter[jb] = -(2 * m + 2);
        rep.side_letter[jpb] = 2 * m + 2;
    }
    return rep;
}

Isometry evaluate(const FuchsianRep& rep, const GroupWord& w) {
    if (w.genus != rep.genus) throw std::invalid_argument("word genus does not match representation");
    std::vector<Isometry> blocks;
    size_t i = 0;
    while (i < w.letters.size()) {
        Isometry acc = rep.letter(w.letters[i]);
        size_t j = i + 1;
        for (; j < w.letters.size() && j < i + 8; ++j) {
            const Isometry g = rep.letter(w.letters[j]);
            Isometry r;
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q)
                    r.m[p][q] = acc.m[p][0] * g.m[0][q] + acc.m[p][1] * g.m[1][q];
            acc = r;
        }
        blocks.push_back(iso_normalize(acc));
        i = j;
    }
    if (blocks.empty()) return Isometry{};
    while (blocks.size() > 1) {
        std::vector<Isometry> next;
        for (size_t k = 0; k + 1 < blocks.size(); k += 2)
            next.push_back(iso_compose(blocks[k], blocks[k + 1]));
        if (blocks.size() % 2) next.push_back(blocks.back());
        blocks.swap(next);
    }
    return blocks[0];
}

OrientedGeodesic word_axis(const FuchsianRep& rep, const GroupWord& w) {
    return axis(evaluate(rep, w));
}

namespace {

// Depth-first enumeration of reduced words c, applying c to a geodesic and
// calling visit(axis of c w c^-1 lifted by c).  visit returns true to stop.
bool enumerate_conjugate_axes(const FuchsianRep& rep, const OrientedGeodesic& base,
                              int depth,
                              const std::function<bool(const OrientedGeodesic&)>& visit) {
    struct Frame {
        Isometry g;
        int last;
        int len;
    };
    std::vector<Frame> stack;
    stack.push_back({Isometry{}, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (visit(apply_to_geodesic(f.g, base))) return true;
        if (f.len >= depth) continue;
        for (int k = 1; k <= 2 * rep.genus; ++k) {
            for (int s : {k, -k}) {
                if (f.last == -s) continue;
                stack.push_back({iso_compose(f.g, rep.letter(s)), s, f.len + 1});
            }
        }
    }
    return false;
}

}  // namespace

std::vector<OrientedGeodesic> conjugate_axes(const FuchsianRep& rep,
                                             const OrientedGeodesic& base, int depth) {
    std::vector<OrientedGeodesic> out;
    enumerate_conjugate_axes(rep, base, depth, [&](const OrientedGeodesic& g) {
        out.push_back(g);
        return false;
    });
    return out;
}

Tri translates_cross(const FuchsianRep& rep, const GroupWord& w1, const GroupWord& w2,
                     int depth, double tol) {
    Isometry m1 = evaluate(rep, w1), m2 = evaluate(rep, w2);
    if (classify(m1, tol) != IsoType::Hyperbolic || classify(m2, tol) != IsoType::Hyperbolic)
        throw std::invalid_argument("translates_cross needs hyperbolic words");
    OrientedGeodesic a1 = axis(m1, tol), a2 = axis(m2, tol);
    bool found = enumerate_conjugate_axes(rep, a2, depth, [&](const OrientedGeodesic& g) {
        if (same_geodesic(a1, g, tol)) return false;
        CrossResult c = geodesics_cross(a1, g, tol);
        return c.crosses && !c.degenerate;
    });
    return found ? Tri::Yes : Tri::No;
}

Simplicity is_simple_closed_geodesic(const FuchsianRep& rep, const GroupWord& w,
                                     int depth, double tol) {
    GroupWord u = primitive_root(w);
    if (u.empty()) throw std::invalid_argument("simplicity of the trivial word is undefined");
    Isometry M = evaluate(rep, u);
    if (classify(M, tol) != IsoType::Hyperbolic)
        return Simplicity::Unknown;
    OrientedGeodesic ax = axis(M, tol);

    // Cheap witness search first: conjugate axes crossing the base axis.
    bool crossing = enumerate_conjugate_axes(rep, ax, std::min(depth, 4),
                                             [&](const OrientedGeodesic& g) {
        if (same_geodesic(ax, g, tol)) return false;
        CrossResult c = geodesics_cross(ax, g, tol);
        return c.crosses && !c.degenerate;
    });
    if (crossing) return Simplicity::NonSimple;

    const int n = 4 * rep.genus;
    std::vector<DiskGeo> sides(n);
    for (int j = 0; j < n; ++j)
        sides[j] = geo_through(rep.verts[j], rep.verts[(j + 1) % n]);

    DiskGeo axg = geo_from_angles(ax.from, ax.to);
    const double vertex_guard = 1e-7;

    // Locate the polygon translate containing a point of the axis; work with
    // the pulled back point p = h^-1 p0.
    Cx p = geo_point(axg, 0.5);
    Isometry h;           // current polygon is h * D
    Isometry hinv;        // cached inverse
    {
        int steps = 0;
        while (true) {
            int worst = -1;
            double worst_v = -vertex_guard;
            for (int j = 0; j < n; ++j) {
                double v = side_value(sides[j], p);
                if (v < worst_v) {
                    worst_v = v;
                    worst = j;
                }
            }
            if (worst < 0) break;
            const Isometry c = rep.letter(rep.side_letter[worst]);
            p = apply_disk(iso_inverse(c), p);
            h = iso_compose(h, c);
            if (++steps > 5000) return Simplicity::Unknown;
        }
        hinv = iso_inverse(h);
    }

    // Trace one full period of the axis through the tessellation.
    auto psl_close = [&](const Isometry& x, const Isometry& y) {
        double dp = 0, dm = 0, scale = 1.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                dp = std::max(dp, std::fabs(x.m[i][j] - y.m[i][j]));
                dm = std::max(dm, std::fabs(x.m[i][j] + y.m[i][j]));
                scale = std::max(scale, std::fabs(x.m[i][j]));
            }
        return std::min(dp, dm) < 1e-6 * scale;
    };
    Isometry h0 = h;
    Isometry stop_fwd = iso_compose(M, h0), stop_bwd = iso_compose(iso_inverse(M), h0);
    std::vector<Isometry> walk{h0};
    int entry = -1;
    const int step_cap = 400 + 200 * u.length();
    for (int step = 0;; ++step) {
        if (step > step_cap) return Simplicity::Unknown;
        // Axis pulled back to the D frame.
        OrientedGeodesic local = apply_to_geodesic(hinv, ax);
        DiskGeo lg = geo_from_angles(local.from, local.to);
        int exit = -1;
        for (int j = 0; j < n; ++j) {
            if (j == entry) continue;
            double v0 = side_value(lg, rep.verts[j]);
            double v1 = side_value(lg, rep.verts[(j + 1) % n]);
            if (std::fabs(v0) < vertex_guard || std::fabs(v1) < vertex_guard)
                return Simplicity::Unknown;
            if ((v0 > 0) == (v1 > 0)) continue;
            if (exit >= 0) {
                // Two candidate crossings happen only on the very first
                // polygon (entry unknown): take either direction, the walk
                // closes at M^{+1} or M^{-1}.
                if (entry >= 0) return Simplicity::Unknown;
                continue;
            }
            exit = j;
        }
        if (exit < 0) return Simplicity::Unknown;
        const int letter = rep.side_letter[exit];
        const Isometry c = rep.letter(letter);
        h = iso_compose(h, c);
        hinv = iso_compose(iso_inverse(c), hinv);
        // Entry side of the new polygon is the partner of the exit side.
        entry = -1;
        for (int j = 0; j < n; ++j)
            if (rep.side_letter[j] == -letter) entry = j;
        walk.push_back(h);
        if (psl_close(h, stop_fwd) || psl_close(h, stop_bwd)) break;
    }

    // Candidate lifts crossing the traced period: c_i c_j^-1 * axis.
    for (size_t i = 0; i < walk.size(); ++i) {
        Isometry wi_inv = iso_inverse(walk[i]);
        for (size_t j = 0; j < walk.size(); ++j) {
            if (i == j) continue;
            Isometry t = iso_compose(walk[j], wi_inv);
            OrientedGeodesic g = apply_to_geodesic(t, ax);
            if (same_geodesic(ax, g, tol)) continue;
            CrossResult c = geodesics_cross(ax, g, tol);
            if (c.degenerate) return Simplicity::Unknown;
            if (c.crosses) return Simplicity::NonSimple;
        }
    }
    return Simplicity::Simple;
}

}  // namespace hn
