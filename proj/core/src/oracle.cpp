#include "seprect/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seprect/circles.hpp"

namespace seprect {

namespace {

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Rect oracle_mbsr_o(std::span<const Point> red, std::span<const Point> blue, int k,
                   const Rect& frame) {
    if (blue.size() > 40) throw GuardExceeded("oracle_mbsr_o: more than 40 blue points");
    const Rect smin = smallest_enclosing_rect(red);
    if (!frame.contains_rect(smin)) {
        throw InvalidInstance("oracle_mbsr_o: frame does not contain the red bounding box");
    }

    // Blue points strictly inside S_min are unavoidable and not charged
    // against k, matching the solver's semantics.
    std::vector<Point> kept;
    for (const Point& p : blue) {
        if (!rect_contains_blue(smin, p)) kept.push_back(p);
    }
    blue = kept;

    std::vector<double> xlo{frame.xmin, smin.xmin}, xhi{frame.xmax, smin.xmax};
    std::vector<double> ylo{frame.ymin, smin.ymin}, yhi{frame.ymax, smin.ymax};
    for (const Point& p : blue) {
        if (p.x >= frame.xmin && p.x <= smin.xmin) xlo.push_back(p.x);
        if (p.x >= smin.xmax && p.x <= frame.xmax) xhi.push_back(p.x);
        if (p.y >= frame.ymin && p.y <= smin.ymin) ylo.push_back(p.y);
        if (p.y >= smin.ymax && p.y <= frame.ymax) yhi.push_back(p.y);
    }
    sort_unique(xlo);
    sort_unique(xhi);
    sort_unique(ylo);
    sort_unique(yhi);

    bool found = false;
    Rect best{};
    double best_area = -1.0;
    for (double x0 : xlo)
        for (double x1 : xhi)
            for (double y0 : ylo)
                for (double y1 : yhi) {
                    const Rect r{x0, y0, x1, y1};
                    if (count_blue_inside(r, blue) > k) continue;
                    const double area = r.area();
                    if (!found || area > best_area ||
                        (area == best_area && rect_tuple_less(r, best))) {
                        found = true;
                        best = r;
                        best_area = area;
                    }
                }
    if (!found) throw UnboundedInstance("oracle_mbsr_o: no candidate");
    return best;
}

namespace {

struct Box {
    // Edge-coordinate intervals: xmin in [lx0, lx1], etc.
    double lx0, lx1, ly0, ly1, hx0, hx1, hy0, hy1;

    double upper_area() const { return (hx1 - lx0) * (hy1 - ly0); }
    Rect min_extent() const { return {lx1, ly1, hx0, hy0}; }
    double widest() const {
        return std::max({lx1 - lx0, ly1 - ly0, hx1 - hx0, hy1 - hy0});
    }
};

bool rect_hits_any(const Rect& r, std::span<const UnitCircle> circles) {
    for (const UnitCircle& c : circles) {
        if (!rect_avoids_circle(r, c)) return true;
    }
    return false;
}

}  // namespace

CircleOracleResult oracle_mbsr_c(std::span<const Point> red, std::span<const UnitCircle> circles,
                                 const Rect& frame, double grid_step) {
    if (circles.size() > 10) throw GuardExceeded("oracle_mbsr_c: more than 10 circles");
    if (grid_step <= 0.0) throw InvalidInstance("oracle_mbsr_c: grid_step must be positive");
    const Rect smin = smallest_enclosing_rect(red);
    if (!frame.contains_rect(smin)) {
        throw InvalidInstance("oracle_mbsr_c: frame does not contain the red bounding box");
    }
    std::vector<UnitCircle> kept;
    for (const UnitCircle& c : circles) {
        if (classify_region(c, smin) != Region::Inside) kept.push_back(c);
    }

    CircleOracleResult res;
    // Seed with a greedily extended rectangle so bound pruning bites early.
    std::optional<Rect> frame_opt = frame;
    Rect seed = smin;
    for (int pass = 0; pass < 3; ++pass) {
        seed.xmax = max_extend(seed, Region::E, kept, frame_opt);
        seed.ymax = max_extend(seed, Region::N, kept, frame_opt);
        seed.xmin = max_extend(seed, Region::W, kept, frame_opt);
        seed.ymin = max_extend(seed, Region::S, kept, frame_opt);
    }
    res.rect = seed;
    res.lower = seed.area();
    res.upper = res.lower;
    // Any grid_step-sized box can beat its own feasible witness by at most
    // this much; boxes within that margin of the incumbent are settled.
    const double slack = 2.0 * grid_step * (frame.width() + frame.height());
    std::vector<Box> stack{
        Box{frame.xmin, smin.xmin, frame.ymin, smin.ymin, smin.xmax, frame.xmax, smin.ymax,
            frame.ymax}};
    while (!stack.empty()) {
        const Box b = stack.back();
        stack.pop_back();
        if (b.upper_area() <= res.lower + slack) {
            res.upper = std::max(res.upper, b.upper_area());
            continue;
        }
        const Rect inner = b.min_extent();
        if (rect_hits_any(inner, kept)) continue;
        if (b.widest() <= grid_step) {
            res.upper = std::max(res.upper, b.upper_area());
            const double area = inner.area();
            if (area > res.lower ||
                (area == res.lower && rect_tuple_less(inner, res.rect))) {
                res.lower = area;
                res.rect = inner;
            }
            continue;
        }
        Box a = b, c = b;
        const double w = b.widest();
        if (b.lx1 - b.lx0 == w) {
            const double m = 0.5 * (b.lx0 + b.lx1);
            a.lx1 = m;
            c.lx0 = m;
        } else if (b.ly1 - b.ly0 == w) {
            const double m = 0.5 * (b.ly0 + b.ly1);
            a.ly1 = m;
            c.ly0 = m;
        } else if (b.hx1 - b.hx0 == w) {
            const double m = 0.5 * (b.hx0 + b.hx1);
            a.hx1 = m;
            c.hx0 = m;
        } else {
            const double m = 0.5 * (b.hy0 + b.hy1);
            a.hy1 = m;
            c.hy0 = m;
        }
        stack.push_back(a);
        stack.push_back(c);
    }

    // Local refinement: push each edge to its true cap; the refined area may
    // exceed the grid resolution but never the certified upper bound.
    const std::optional<Rect>& fr = frame_opt;
    Rect polished = res.rect;
    for (int pass = 0; pass < 3; ++pass) {
        polished.xmax = max_extend(polished, Region::E, kept, fr);
        polished.ymax = max_extend(polished, Region::N, kept, fr);
        polished.xmin = max_extend(polished, Region::W, kept, fr);
        polished.ymin = max_extend(polished, Region::S, kept, fr);
    }
    if (!rect_hits_any(polished, kept) && polished.area() > res.lower) {
        res.rect = polished;
        res.lower = polished.area();
    }
    res.upper = std::max(res.upper, res.lower);
    return res;
}

std::vector<LevelChain> oracle_staircase_levels(std::vector<CascadePoint> pts, int k) {
    std::sort(pts.begin(), pts.end(), [](const CascadePoint& a, const CascadePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::vector<LevelChain> chains(static_cast<std::size_t>(k) + 1);
    std::vector<double> seen;
    for (const CascadePoint& p : pts) {
        seen.push_back(p.y);
        std::vector<double> ys = seen;
        std::sort(ys.begin(), ys.end());
        for (int t = 0; t <= k; ++t) {
            if (t >= static_cast<int>(ys.size())) break;
            const double v = ys[static_cast<std::size_t>(t)];
            auto& verts = chains[static_cast<std::size_t>(t)].verts;
            if (!verts.empty() && verts.back().x == p.x) {
                verts.back().y = v;
            } else {
                verts.push_back(StairVertex{p.x, v, StairVertexKind::BluePoint});
            }
        }
    }
    return chains;
}

ArcOptResult oracle_arc_max_1d(double w, double h, double alpha, double beta) {
    auto f = [&](double t) { return (w - std::sin(t)) * (h - std::cos(t)); };
    const int n = 4096;
    double best_t = alpha, best_f = f(alpha);
    for (int i = 1; i <= n; ++i) {
        const double t = alpha + (beta - alpha) * i / n;
        if (f(t) > best_f) {
            best_f = f(t);
            best_t = t;
        }
    }
    const double step = (beta - alpha) / n;
    double lo = std::max(alpha, best_t - step), hi = std::min(beta, best_t + step);
    constexpr double kInvPhi = 0.6180339887498949;
    double c = hi - kInvPhi * (hi - lo), d = lo + kInvPhi * (hi - lo);
    for (int i = 0; i < 120 && hi - lo > 1e-14; ++i) {
        if (f(c) > f(d)) {
            hi = d;
            d = c;
            c = hi - kInvPhi * (hi - lo);
        } else {
            lo = c;
            c = d;
            d = lo + kInvPhi * (hi - lo);
        }
    }
    const double t = 0.5 * (lo + hi);
    if (f(t) > best_f) return {t, f(t)};
    return {best_t, best_f};
}

ArcPairResult oracle_arc_max_2d(double a, double b, double a1, double b1, double a2, double b2) {
    auto f = [&](double t1, double t2) {
        return (a - std::sin(t1) - std::sin(t2)) * (b - std::cos(t1) - std::cos(t2));
    };
    const int n = 256;
    ArcPairResult best{a1, a2, f(a1, a2)};
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const double t1 = a1 + (b1 - a1) * i / n;
            const double t2 = a2 + (b2 - a2) * j / n;
            const double v = f(t1, t2);
            if (v > best.area) best = {t1, t2, v};
        }
    }
    for (int it = 0; it < 64; ++it) {
        const ArcOptResult r1 =
            oracle_arc_max_1d(a - std::sin(best.theta2), b - std::cos(best.theta2), a1, b1);
        const ArcOptResult r2 =
            oracle_arc_max_1d(a - std::sin(r1.theta), b - std::cos(r1.theta), a2, b2);
        const double v = f(r1.theta, r2.theta);
        if (v <= best.area + 1e-15) break;
        best = {r1.theta, r2.theta, v};
    }
    return best;
}

}  // namespace seprect
