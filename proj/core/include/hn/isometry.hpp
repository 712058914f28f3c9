#pragma once

#include <array>
#include <string>

namespace hn {

inline constexpr double kGeomTol = 1e-9;

// Orientation preserving isometry of the hyperbolic plane, stored as a real
// 2x2 matrix acting on the upper half-plane, normalized to det +1 (the sign
// of the matrix itself is a PSL(2,R) representative and carries no meaning).
struct Isometry {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    double trace() const { return m[0][0] + m[1][1]; }
};

Isometry iso_normalize(const Isometry& a);   // scale to det +1; throws if det <= 0
Isometry iso_compose(const Isometry& a, const Isometry& b);
Isometry iso_inverse(const Isometry& a);
Isometry iso_power(const Isometry& a, int k);

enum class IsoType { Hyperbolic, Parabolic, Elliptic };

// |trace| against 2 with a tolerance band around the parabolic boundary.
IsoType classify(const Isometry& a, double tol = kGeomTol);

// Unit-disk boundary angles in [0, 2pi).  The half-plane boundary point p/q
// (projective pair) maps to angle -2*atan2(q,p) under the fixed Cayley
// transform w = (z - i)/(z + i); infinity maps to angle 0.
double boundary_angle(double p, double q);
double apply_boundary(const Isometry& a, double theta);

double norm_angle(double t);                       // into [0, 2pi)
double ccw_gap(double from, double to);            // arc length going ccw, [0, 2pi)
double angle_dist(double a, double b);             // circle distance, [0, pi]
// Strict membership of x in the open ccw arc (lo, hi), with a tolerance
// margin around both endpoints.
bool in_open_arc(double x, double lo, double hi, double tol = kGeomTol);

// Oriented complete geodesic: boundary angles of the repelling ("from") and
// attracting ("to") endpoints.
struct OrientedGeodesic {
    double from = 0.0;
    double to = 0.0;
};

// Axis of a hyperbolic isometry, from eigenvectors; throws on non-hyperbolic.
OrientedGeodesic axis(const Isometry& a, double tol = kGeomTol);

// 2*arccosh(|tr|/2); zero for non-hyperbolic elements.
double translation_length(const Isometry& a);

OrientedGeodesic apply_to_geodesic(const Isometry& a, const OrientedGeodesic& g);

struct CrossResult {
    bool crosses = false;
    bool degenerate = false;   // a shared endpoint within tolerance
};

// Strict interleaving of the endpoint pairs on the circle.
CrossResult geodesics_cross(const OrientedGeodesic& g1, const OrientedGeodesic& g2,
                            double tol = kGeomTol);

// Same unoriented geodesic within tolerance.
bool same_geodesic(const OrientedGeodesic& g1, const OrientedGeodesic& g2,
                   double tol = kGeomTol);

}  // namespace hn
