#include "hn/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hn {

Isometry iso_normalize(const Isometry& a) {
    double d = a.det();
    if (!(d > 0))
        throw std::invalid_argument("isometry matrix must have positive determinant");
    double s = 1.0 / std::sqrt(d);
    Isometry r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] * s;
    return r;
}

Isometry iso_compose(const Isometry& a, const Isometry& b) {
    Isometry r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return iso_normalize(r);
}

Isometry iso_inverse(const Isometry& a) {
    Isometry r;
    double d = a.det();
    r.m[0][0] = a.m[1][1] / d;
    r.m[0][1] = -a.m[0][1] / d;
    r.m[1][0] = -a.m[1][0] / d;
    r.m[1][1] = a.m[0][0] / d;
    return r;
}

Isometry iso_power(const Isometry& a, int k) {
    Isometry r;
    if (k == 0) return r;
    Isometry base = k > 0 ? a : iso_inverse(a);
    int n = k > 0 ? k : -k;
    for (int i = 0; i < n; ++i) r = iso_compose(r, base);
    return r;
}

IsoType classify(const Isometry& a, double tol) {
    double t = std::fabs(iso_normalize(a).trace());
    if (t > 2.0 + tol) return IsoType::Hyperbolic;
    if (t < 2.0 - tol) return IsoType::Elliptic;
    return IsoType::Parabolic;
}

double norm_angle(double t) {
    const double tau = 2.0 * M_PI;
    t = std::fmod(t, tau);
    if (t < 0) t += tau;
    if (t >= tau) t = 0.0;
    return t;
}

double boundary_angle(double p, double q) { return norm_angle(-2.0 * std::atan2(q, p)); }

double apply_boundary(const Isometry& a, double theta) {
    double p = std::cos(theta / 2.0), q = -std::sin(theta / 2.0);
    double pp = a.m[0][0] * p + a.m[0][1] * q;
    double qq = a.m[1][0] * p + a.m[1][1] * q;
    return boundary_angle(pp, qq);
}

double ccw_gap(double from, double to) {
    double d = norm_angle(to) - norm_angle(from);
    if (d < 0) d += 2.0 * M_PI;
    return d;
}

double angle_dist(double a, double b) {
    double d = ccw_gap(a, b);
    return d <= M_PI ? d : 2.0 * M_PI - d;
}

bool in_open_arc(double x, double lo, double hi, double tol) {
    double len = ccw_gap(lo, hi);
    double pos = ccw_gap(lo, x);
    return pos > tol && pos < len - tol;
}

OrientedGeodesic axis(const Isometry& a0, double tol) {
    Isometry a = iso_normalize(a0);
    if (classify(a, tol) != IsoType::Hyperbolic)
        throw std::invalid_argument("axis requested for a non-hyperbolic isometry");
    double tr = a.trace();
    double disc = std::sqrt(tr * tr - 4.0);
    double l1 = (tr + std::copysign(disc, tr)) / 2.0;   // the larger |eigenvalue|
    double l2 = (tr - std::copysign(disc, tr)) / 2.0;
    auto eigen_dir = [&](double lam, double* p, double* q) {
        // Rows of (A - lam I) are proportional; pick the better conditioned one.
        double v1p = a.m[0][1], v1q = lam - a.m[0][0];
        double v2p = lam - a.m[1][1], v2q = a.m[1][0];
        if (std::fabs(v1p) + std::fabs(v1q) >= std::fabs(v2p) + std::fabs(v2q)) {
            *p = v1p;
            *q = v1q;
        } else {
            *p = v2p;
            *q = v2q;
        }
    };
    double pa, qa, pr, qr;
    eigen_dir(l1, &pa, &qa);   // |l1| > 1: attracting (Mobius derivative 1/l1^2 < 1)
    eigen_dir(l2, &pr, &qr);
    OrientedGeodesic g;
    g.from = boundary_angle(pr, qr);
    g.to = boundary_angle(pa, qa);
    return g;
}

double translation_length(const Isometry& a) {
    double t = std::fabs(iso_normalize(a).trace());
    if (t <= 2.0) return 0.0;
    return 2.0 * std::acosh(t / 2.0);
}

OrientedGeodesic apply_to_geodesic(const Isometry& a, const OrientedGeodesic& g) {
    return {apply_boundary(a, g.from), apply_boundary(a, g.to)};
}

CrossResult geodesics_cross(const OrientedGeodesic& g1, const OrientedGeodesic& g2,
                            double tol) {
    CrossResult r;
    double e1[2] = {g1.from, g1.to};
    double e2[2] = {g2.from, g2.to};
    for (double x : e1)
        for (double y : e2)
            if (angle_dist(x, y) < tol) {
                r.degenerate = true;
                return r;
            }
    bool c1 = in_open_arc(e2[0], e1[0], e1[1], tol);
    bool c2 = in_open_arc(e2[1], e1[0], e1[1], tol);
    r.crosses = (c1 != c2);
    return r;
}

bool same_geodesic(const OrientedGeodesic& g1, const OrientedGeodesic& g2, double tol) {
    bool direct = angle_dist(g1.from, g2.from) < tol && angle_dist(g1.to, g2.to) < tol;
    bool flipped = angle_dist(g1.from, g2.to) < tol && angle_dist(g1.to, g2.from) < tol;
    return direct || flipped;
}

}  // namespace hn
