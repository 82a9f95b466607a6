#pragma once

#include <vector>

namespace seprect {

/// All real roots of a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0, via the
/// companion-matrix eigenvalues (degree reduced when leading terms vanish).
std::vector<double> poly_real_roots(double a4, double a3, double a2, double a1, double a0);

/// The critical-point quartic of the arc area function at x = tan(theta):
/// (w^2-1)x^4 - 2whx^3 + (w^2+h^2+2)x^2 - 2whx + (h^2-1).
double arc_quartic_value(double w, double h, double x);

struct ArcOptResult {
    double theta = 0.0;
    double area = 0.0;
};

/// Maximize f(theta) = (w - sin theta)(h - cos theta) over
/// [alpha, beta] within [0, pi/2]: evaluates both endpoints and every
/// in-range root of the critical-point quartic. Falls back to a dense
/// numeric scan when w <= 1 or h <= 1.
ArcOptResult optimize_arc(double w, double h, double alpha, double beta);

struct ArcPairResult {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double area = 0.0;
};

/// Maximize f(t1, t2) = (a - sin t1 - sin t2)(b - cos t1 - cos t2) over
/// [a1, b1] x [a2, b2]: seeded alternating per-axis root enumeration plus
/// the four boundary curves.
ArcPairResult optimize_arc_pair(double a, double b, double a1, double b1, double a2, double b2);

}  // namespace seprect
