#include "seprect/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace seprect {

namespace {

double band_distance(double v, double lo, double hi) {
    return std::max({lo - v, 0.0, v - hi});
}

}  // namespace

Rect compute_smax_circles(const Rect& smin, std::span<const UnitCircle> circles,
                          std::optional<Rect> frame) {
    double e = kInf, n = kInf, w = kInf, s = kInf;  // outward slack per edge
    for (const UnitCircle& c : circles) {
        if (classify_region(c, smin) == Region::Inside) continue;
        const double dx_band = band_distance(c.center.x, smin.xmin, smin.xmax);
        const double dy_band = band_distance(c.center.y, smin.ymin, smin.ymax);
        if (dy_band < 1.0) {
            const double reach = std::sqrt(1.0 - dy_band * dy_band);
            if (c.center.x > smin.xmax) e = std::min(e, c.center.x - reach - smin.xmax);
            if (c.center.x < smin.xmin) w = std::min(w, smin.xmin - c.center.x - reach);
        }
        if (dx_band < 1.0) {
            const double reach = std::sqrt(1.0 - dx_band * dx_band);
            if (c.center.y > smin.ymax) n = std::min(n, c.center.y - reach - smin.ymax);
            if (c.center.y < smin.ymin) s = std::min(s, smin.ymin - c.center.y - reach);
        }
    }
    Rect smax{smin.xmin - w, smin.ymin - s, smin.xmax + e, smin.ymax + n};
    if (frame) {
        smax.xmin = std::max(smax.xmin, frame->xmin);
        smax.ymin = std::max(smax.ymin, frame->ymin);
        smax.xmax = std::min(smax.xmax, frame->xmax);
        smax.ymax = std::min(smax.ymax, frame->ymax);
    }
    if (std::isinf(smax.xmin) || std::isinf(smax.ymin) || std::isinf(smax.xmax) ||
        std::isinf(smax.ymax)) {
        throw UnboundedInstance("an edge of S_min meets neither circle nor frame");
    }
    return smax;
}

double Envelope::piece_y(const EnvPiece& p, double x) const {
    if (p.kind == EnvPieceKind::Flat) return p.y;
    const Point& c = centers[static_cast<std::size_t>(p.circle)];
    const double dx = x - c.x;
    return c.y - std::sqrt(std::max(0.0, 1.0 - dx * dx));
}

double Envelope::max_y(double x) const {
    x = std::clamp(x, 0.0, bx);
    double best = -kInf;
    for (const EnvPiece& p : pieces) {
        if (x >= p.x0 - kCoordEps && x <= p.x1 + kCoordEps) {
            best = std::max(best, piece_y(p, std::clamp(x, p.x0, p.x1)));
        }
    }
    return best;
}

double Envelope::max_x(double y) const {
    double reach = 0.0;
    for (const EnvPiece& p : pieces) {
        const double y_end = piece_y(p, p.x1);
        if (y_end >= y - kCoordEps) {
            reach = p.x1;
            continue;
        }
        if (piece_y(p, p.x0) < y - kCoordEps) break;  // drop already below y
        if (p.kind == EnvPieceKind::Flat) {
            reach = p.x0;
        } else {
            const Point& c = centers[static_cast<std::size_t>(p.circle)];
            const double dy = c.y - y;
            const double x = c.x - std::sqrt(std::max(0.0, 1.0 - dy * dy));
            reach = std::clamp(x, p.x0, p.x1);
        }
        break;
    }
    return std::min(reach, bx);
}

std::vector<Point> Envelope::arc_inner_corners() const {
    std::vector<Point> out;
    for (const EnvPiece& p : pieces) {
        if (p.kind != EnvPieceKind::Arc) continue;
        out.push_back(Point{p.x0, piece_y(p, p.x1)});
    }
    return out;
}

namespace {

struct Curve {
    Point c;  // local center
    // Domain [start, c.x]: arc; (c.x, inf): flat at c.y - 1.
    double start() const { return c.x - 1.0; }
    double eval(double x) const {
        if (x < start() - kCoordEps) return kInf;
        if (x >= c.x) return c.y - 1.0;
        const double dx = x - c.x;
        return c.y - std::sqrt(std::max(0.0, 1.0 - dx * dx));
    }
};

// x where the arc of `a` descends through height y (left solution).
std::optional<double> arc_level_x(const Curve& a, double y) {
    const double dy = a.c.y - y;
    if (dy < 0.0 || dy > 1.0) return std::nullopt;
    return a.c.x - std::sqrt(std::max(0.0, 1.0 - dy * dy));
}

void add_circle_crossings(const Curve& a, const Curve& b, std::vector<double>& xs) {
    // Arc-flat crossings of each arc with the other's bottom level; these
    // exist whether or not the circles themselves intersect.
    if (auto x = arc_level_x(a, b.c.y - 1.0)) xs.push_back(*x);
    if (auto x = arc_level_x(b, a.c.y - 1.0)) xs.push_back(*x);
    // Unit circle intersections of the two centers.
    const double dx = b.c.x - a.c.x, dy = b.c.y - a.c.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 >= 4.0 || d2 <= kDist2Eps) return;
    const double d = std::sqrt(d2);
    const double half = 0.5 * std::sqrt(std::max(0.0, 4.0 - d2));
    const double mx = 0.5 * (a.c.x + b.c.x), my = 0.5 * (a.c.y + b.c.y);
    xs.push_back(mx + half * (dy / d));
    xs.push_back(mx - half * (dy / d));
}

}  // namespace

Envelope build_envelope(std::span<const UnitCircle> circles, Region quadrant, const Rect& smin,
                        const Rect& smax) {
    Envelope env;
    env.quadrant = quadrant;
    env.frame = corner_frame(quadrant, smin);
    const Point far{quadrant == Region::NE || quadrant == Region::SE ? smax.xmax : smax.xmin,
                    quadrant == Region::NE || quadrant == Region::NW ? smax.ymax : smax.ymin};
    const Point local_far = env.frame.to_local(far);
    env.bx = local_far.x;
    env.by = local_far.y;

    std::vector<Curve> curves;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        if (classify_region(circles[i], smin) != quadrant) continue;
        const Point lc = env.frame.to_local(circles[i].center);
        if (lc.x - 1.0 >= env.bx) continue;  // no effect inside the window
        env.centers.push_back(lc);
        env.circle_ids.push_back(static_cast<int>(i));
        curves.push_back(Curve{lc});
    }

    // Candidate abscissae: window ends, curve joints, and all pairwise
    // crossings; between consecutive candidates one curve wins throughout.
    std::vector<double> xs{0.0, env.bx};
    for (const Curve& a : curves) {
        xs.push_back(a.start());
        xs.push_back(a.c.x);
        if (auto x = arc_level_x(a, env.by)) xs.push_back(*x);
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            add_circle_crossings(curves[i], curves[j], xs);
    std::erase_if(xs, [&](double x) { return x < 0.0 || x > env.bx; });
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
             xs.end());

    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double x0 = xs[i], x1 = xs[i + 1];
        const double mid = 0.5 * (x0 + x1);
        int winner = -1;  // -1 = window top
        double best = env.by;
        for (std::size_t ci = 0; ci < curves.size(); ++ci) {
            const double v = curves[ci].eval(mid);
            if (v < best) {
                best = v;
                winner = static_cast<int>(ci);
            }
        }
        EnvPiece piece;
        piece.x0 = x0;
        piece.x1 = x1;
        if (winner < 0) {
            piece = EnvPiece{EnvPieceKind::Flat, x0, x1, env.by, -1};
        } else if (mid < curves[static_cast<std::size_t>(winner)].c.x) {
            piece = EnvPiece{EnvPieceKind::Arc, x0, x1, 0.0, winner};
        } else {
            piece = EnvPiece{EnvPieceKind::Flat, x0, x1,
                             curves[static_cast<std::size_t>(winner)].c.y - 1.0, winner};
        }
        if (!env.pieces.empty()) {
            EnvPiece& prev = env.pieces.back();
            if (prev.kind == piece.kind && prev.circle == piece.circle &&
                (piece.kind == EnvPieceKind::Arc || prev.y == piece.y)) {
                prev.x1 = x1;
                continue;
            }
        }
        env.pieces.push_back(piece);
    }
    if (env.pieces.empty() && env.bx >= 0.0) {
        env.pieces.push_back(EnvPiece{EnvPieceKind::Flat, 0.0, env.bx, env.by, -1});
    }

    // Breakpoints: the clipped ends, plus every junction. A junction with a
    // height drop pins the corner at the top (corner breakpoint) and starts
    // the next circle at the bottom (plain). Continuous junctions are plain
    // at a circle's own arc-to-bottom transition and corner where two
    // distinct supports cross.
    if (!env.pieces.empty()) {
        env.breakpoints.push_back(
            EnvBreakpoint{Point{0.0, env.piece_y(env.pieces.front(), 0.0)}, BreakKind::ClipEnd});
        for (std::size_t i = 0; i + 1 < env.pieces.size(); ++i) {
            const EnvPiece& l = env.pieces[i];
            const EnvPiece& r = env.pieces[i + 1];
            const double x = l.x1;
            const double yl = env.piece_y(l, x);
            const double yr = env.piece_y(r, x);
            if (yl > yr + kCoordEps) {
                env.breakpoints.push_back(EnvBreakpoint{Point{x, yl}, BreakKind::Corner});
                env.breakpoints.push_back(EnvBreakpoint{Point{x, yr}, BreakKind::Plain});
            } else if (l.kind == EnvPieceKind::Arc && r.kind == EnvPieceKind::Flat &&
                       l.circle == r.circle) {
                env.breakpoints.push_back(EnvBreakpoint{Point{x, yr}, BreakKind::Plain});
            } else {
                env.breakpoints.push_back(EnvBreakpoint{Point{x, yr}, BreakKind::Corner});
            }
        }
        env.breakpoints.push_back(
            EnvBreakpoint{Point{env.bx, env.piece_y(env.pieces.back(), env.bx)}, BreakKind::ClipEnd});
    }
    return env;
}

}  // namespace seprect
