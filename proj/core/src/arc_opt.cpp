#include "seprect/arc_opt.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace seprect {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

std::vector<double> companion_real_roots(const std::vector<double>& coeffs) {
    // coeffs: ascending degree, leading coefficient last and non-negligible.
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) m(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    std::vector<double> roots;
    for (int i = 0; i < deg; ++i) {
        const auto ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) <= 1e-8 * (1.0 + std::abs(ev.real()))) {
            roots.push_back(ev.real());
        }
    }
    return roots;
}

}  // namespace

std::vector<double> poly_real_roots(double a4, double a3, double a2, double a1, double a0) {
    std::vector<double> coeffs{a0, a1, a2, a3, a4};
    const double scale = std::max({std::abs(a4), std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0), 1.0});
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();
    return companion_real_roots(coeffs);
}

double arc_quartic_value(double w, double h, double x) {
    return (((w * w - 1.0) * x - 2.0 * w * h) * x + (w * w + h * h + 2.0)) * x * x -
           2.0 * w * h * x + (h * h - 1.0);
}

namespace {

double arc_area(double w, double h, double t) {
    return (w - std::sin(t)) * (h - std::cos(t));
}

// Golden-section refinement of a bracketed maximum.
double golden_refine(double w, double h, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = arc_area(w, h, c);
    double fd = arc_area(w, h, d);
    for (int i = 0; i < 90 && (b - a) > 1e-13; ++i) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - kInvPhi * (b - a);
            fc = arc_area(w, h, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + kInvPhi * (b - a);
            fd = arc_area(w, h, d);
        }
    }
    return 0.5 * (a + b);
}

ArcOptResult scan_maximize(double w, double h, double alpha, double beta) {
    constexpr int kSamples = 512;
    double best_t = alpha;
    double best_f = arc_area(w, h, alpha);
    for (int i = 1; i <= kSamples; ++i) {
        const double t = alpha + (beta - alpha) * i / kSamples;
        const double f = arc_area(w, h, t);
        if (f > best_f) {
            best_f = f;
            best_t = t;
        }
    }
    const double step = (beta - alpha) / kSamples;
    const double t = golden_refine(w, h, std::max(alpha, best_t - step), std::min(beta, best_t + step));
    const double f = arc_area(w, h, t);
    if (f > best_f) return {t, f};
    return {best_t, best_f};
}

}  // namespace

ArcOptResult optimize_arc(double w, double h, double alpha, double beta) {
    alpha = std::clamp(alpha, 0.0, kHalfPi);
    beta = std::clamp(beta, alpha, kHalfPi);
    if (!(w > 1.0) || !(h > 1.0)) {
        // The quartic derivation assumes the circle clears the supports by
        // more than its radius; outside that regime go numeric.
        return scan_maximize(w, h, alpha, beta);
    }

    std::vector<double> cand{alpha, beta};
    const double xlo = std::tan(alpha);
    const double xhi = (beta >= kHalfPi - 1e-12) ? std::numeric_limits<double>::infinity() : std::tan(beta);
    for (double x : poly_real_roots(w * w - 1.0, -2.0 * w * h, w * w + h * h + 2.0, -2.0 * w * h,
                                    h * h - 1.0)) {
        if (x < xlo || x > xhi) continue;
        // Squaring the derivative equation introduces spurious roots; keep
        // only genuine critical points of f.
        const double t = std::atan(x);
        const double df = w * std::sin(t) - h * std::cos(t) + std::cos(2.0 * t);
        if (std::abs(df) > 1e-6 * (1.0 + w + h)) continue;
        cand.push_back(t);
    }

    ArcOptResult best{alpha, arc_area(w, h, alpha)};
    for (double t : cand) {
        const double f = arc_area(w, h, t);
        if (f > best.area || (f == best.area && t < best.theta)) {
            best = {t, f};
        }
    }
    return best;
}

ArcPairResult optimize_arc_pair(double a, double b, double a1, double b1, double a2, double b2) {
    a1 = std::clamp(a1, 0.0, kHalfPi);
    b1 = std::clamp(b1, a1, kHalfPi);
    a2 = std::clamp(a2, 0.0, kHalfPi);
    b2 = std::clamp(b2, a2, kHalfPi);

    auto area = [&](double t1, double t2) {
        return (a - std::sin(t1) - std::sin(t2)) * (b - std::cos(t1) - std::cos(t2));
    };

    ArcPairResult best{a1, a2, area(a1, a2)};
    auto offer = [&](double t1, double t2) {
        const double f = area(t1, t2);
        if (f > best.area) best = {t1, t2, f};
    };

    // Alternating per-axis maximization from a seed; each axis solves the
    // one-arc problem with the opposite corner frozen.
    auto polish = [&](double t1, double t2) {
        for (int it = 0; it < 48; ++it) {
            const double n1 = optimize_arc(a - std::sin(t2), b - std::cos(t2), a1, b1).theta;
            const double n2 = optimize_arc(a - std::sin(n1), b - std::cos(n1), a2, b2).theta;
            const double moved = std::abs(n1 - t1) + std::abs(n2 - t2);
            t1 = n1;
            t2 = n2;
            if (moved < 1e-14) break;
        }
        offer(t1, t2);
    };

    constexpr int kSeeds = 12;
    for (int i = 0; i <= kSeeds; ++i) {
        for (int j = 0; j <= kSeeds; ++j) {
            const double t1 = a1 + (b1 - a1) * i / kSeeds;
            const double t2 = a2 + (b2 - a2) * j / kSeeds;
            offer(t1, t2);
        }
    }
    polish(best.theta1, best.theta2);

    // Boundary curves: one angle pinned at an interval end.
    for (double t1 : {a1, b1}) {
        const auto r = optimize_arc(a - std::sin(t1), b - std::cos(t1), a2, b2);
        offer(t1, r.theta);
    }
    for (double t2 : {a2, b2}) {
        const auto r = optimize_arc(a - std::sin(t2), b - std::cos(t2), a1, b1);
        offer(r.theta, t2);
    }
    polish(best.theta1, best.theta2);
    return best;
}

}  // namespace seprect
