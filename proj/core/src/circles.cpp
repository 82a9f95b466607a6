#include "seprect/circles.hpp"

#include <algorithm>
#include <cmath>

#include "seprect/arc_opt.hpp"

namespace seprect {

namespace {

constexpr Region kQuadrants[4] = {Region::NE, Region::NW, Region::SW, Region::SE};

std::size_t quadrant_index(Region q) {
    switch (q) {
        case Region::NE: return 0;
        case Region::NW: return 1;
        case Region::SW: return 2;
        case Region::SE: return 3;
        default: throw Error("quadrant_index: not a corner region");
    }
}

Region opposite(Region q) {
    switch (q) {
        case Region::NE: return Region::SW;
        case Region::NW: return Region::SE;
        case Region::SW: return Region::NE;
        case Region::SE: return Region::NW;
        default: throw Error("opposite: not a corner region");
    }
}

double band_distance(double v, double lo, double hi) {
    return std::max({lo - v, 0.0, v - hi});
}

void set_corner(Rect& r, Region q, const Point& p) {
    switch (q) {
        case Region::NE: r.xmax = p.x; r.ymax = p.y; break;
        case Region::NW: r.xmin = p.x; r.ymax = p.y; break;
        case Region::SW: r.xmin = p.x; r.ymin = p.y; break;
        case Region::SE: r.xmax = p.x; r.ymin = p.y; break;
        default: throw Error("set_corner: not a corner region");
    }
}

Point get_corner(const Rect& r, Region q) {
    switch (q) {
        case Region::NE: return {r.xmax, r.ymax};
        case Region::NW: return {r.xmin, r.ymax};
        case Region::SW: return {r.xmin, r.ymin};
        case Region::SE: return {r.xmax, r.ymin};
        default: throw Error("get_corner: not a corner region");
    }
}

bool candidate_valid(const Rect& r, const CircleContext& ctx) {
    if (!r.valid() || !r.contains_rect(ctx.smin)) return false;
    if (ctx.frame && !ctx.frame->contains_rect(r)) return false;
    for (const UnitCircle& c : ctx.kept) {
        if (!rect_avoids_circle(r, c)) return false;
    }
    return true;
}

constexpr Region kSides[4] = {Region::E, Region::N, Region::W, Region::S};

void extend_side(Rect& r, Region side, const CircleContext& ctx) {
    const double v = max_extend(r, side, ctx.kept, ctx.frame);
    switch (side) {
        case Region::E: r.xmax = std::max(r.xmax, v); break;
        case Region::N: r.ymax = std::max(r.ymax, v); break;
        case Region::W: r.xmin = std::min(r.xmin, v); break;
        case Region::S: r.ymin = std::min(r.ymin, v); break;
        default: break;
    }
}

struct CandidateSet {
    std::vector<CsrCandidate> out;
    const CircleContext& ctx;

    explicit CandidateSet(const CircleContext& c) : ctx(c) {}

    void offer(const Rect& r, const char* prov) {
        if (!candidate_valid(r, ctx)) return;
        out.push_back(CsrCandidate{r, prov});
    }

    /// Offers r as-is plus fully extended variants (several side orders).
    void offer_extended(Rect r, const char* prov) {
        if (!candidate_valid(r, ctx)) return;
        out.push_back(CsrCandidate{r, prov});
        for (int start = 0; start < 4; ++start) {
            for (int pass = 0; pass < 2; ++pass) {
                Rect g = r;
                for (int i = 0; i < 4; ++i) {
                    const int s = pass == 0 ? (start + i) % 4 : (start - i + 8) % 4;
                    extend_side(g, kSides[s], ctx);
                }
                // A second sweep settles interactions between axes.
                for (Region side : kSides) extend_side(g, side, ctx);
                out.push_back(CsrCandidate{g, prov});
            }
        }
    }
};

/// World-coordinate corner candidates of one envelope: breakpoints plus the
/// inner corners dominating each arc.
std::vector<Point> envelope_corner_points(const Envelope& env, bool corners_only) {
    std::vector<Point> pts;
    for (const EnvBreakpoint& b : env.breakpoints) {
        if (corners_only && b.kind != BreakKind::Corner) continue;
        pts.push_back(env.frame.to_world(b.p));
    }
    for (const Point& p : env.arc_inner_corners()) {
        pts.push_back(env.frame.to_world(p));
    }
    return pts;
}

struct ArcRange {
    Point center;  // local
    double theta_lo = 0.0;
    double theta_hi = 0.0;
};

std::vector<ArcRange> envelope_arcs(const Envelope& env) {
    std::vector<ArcRange> arcs;
    for (const EnvPiece& p : env.pieces) {
        if (p.kind != EnvPieceKind::Arc) continue;
        const Point& c = env.centers[static_cast<std::size_t>(p.circle)];
        const double s_lo = std::clamp(c.x - p.x1, 0.0, 1.0);
        const double s_hi = std::clamp(c.x - p.x0, 0.0, 1.0);
        arcs.push_back(ArcRange{c, std::asin(s_lo), std::asin(s_hi)});
    }
    return arcs;
}

Point arc_corner_local(const ArcRange& a, double theta) {
    return {a.center.x - std::sin(theta), a.center.y - std::cos(theta)};
}

}  // namespace

const Envelope& CircleContext::envelope(Region quadrant) const {
    return env[quadrant_index(quadrant)];
}

double max_extend(const Rect& r, Region side, std::span<const UnitCircle> circles,
                  const std::optional<Rect>& frame) {
    double limit;
    switch (side) {
        case Region::E: limit = frame ? frame->xmax : kInf; break;
        case Region::N: limit = frame ? frame->ymax : kInf; break;
        case Region::W: limit = frame ? frame->xmin : -kInf; break;
        case Region::S: limit = frame ? frame->ymin : -kInf; break;
        default: throw Error("max_extend: not a side");
    }
    for (const UnitCircle& c : circles) {
        if (side == Region::E || side == Region::W) {
            const double dy = band_distance(c.center.y, r.ymin, r.ymax);
            if (dy >= 1.0) continue;
            const double reach = std::sqrt(1.0 - dy * dy);
            if (side == Region::E) {
                const double cap = c.center.x - reach;
                if (cap >= r.xmax - kCoordEps) limit = std::min(limit, cap);
            } else {
                const double cap = c.center.x + reach;
                if (cap <= r.xmin + kCoordEps) limit = std::max(limit, cap);
            }
        } else {
            const double dx = band_distance(c.center.x, r.xmin, r.xmax);
            if (dx >= 1.0) continue;
            const double reach = std::sqrt(1.0 - dx * dx);
            if (side == Region::N) {
                const double cap = c.center.y - reach;
                if (cap >= r.ymax - kCoordEps) limit = std::min(limit, cap);
            } else {
                const double cap = c.center.y + reach;
                if (cap <= r.ymin + kCoordEps) limit = std::max(limit, cap);
            }
        }
    }
    switch (side) {
        case Region::E: return std::max(limit, r.xmax);
        case Region::N: return std::max(limit, r.ymax);
        case Region::W: return std::min(limit, r.xmin);
        default: return std::min(limit, r.ymin);
    }
}

bool is_inextensible(const Rect& r, std::span<const UnitCircle> circles,
                     const std::optional<Rect>& frame, double delta) {
    return max_extend(r, Region::E, circles, frame) - r.xmax <= delta &&
           max_extend(r, Region::N, circles, frame) - r.ymax <= delta &&
           r.xmin - max_extend(r, Region::W, circles, frame) <= delta &&
           r.ymin - max_extend(r, Region::S, circles, frame) <= delta;
}

CircleContext make_circle_context(std::span<const Point> red, std::span<const UnitCircle> circles,
                                  std::optional<Rect> frame) {
    CircleContext ctx;
    ctx.smin = smallest_enclosing_rect(red);
    if (frame) {
        if (!frame->valid() || !frame->contains_rect(ctx.smin)) {
            throw InvalidInstance("frame does not contain the red bounding box");
        }
        ctx.frame = frame;
    }
    for (const UnitCircle& c : circles) {
        if (classify_region(c, ctx.smin) != Region::Inside) ctx.kept.push_back(c);
    }
    ctx.smax = compute_smax_circles(ctx.smin, circles, frame);
    for (Region q : kQuadrants) {
        ctx.env[quadrant_index(q)] = build_envelope(ctx.kept, q, ctx.smin, ctx.smax);
    }
    return ctx;
}

std::vector<CsrCandidate> solve_case1(const CircleContext& ctx, std::span<const Point> red) {
    CandidateSet cs(ctx);
    std::vector<Point> bprime;
    for (Region q : kQuadrants) {
        for (const Point& p : envelope_corner_points(ctx.envelope(q), /*corners_only=*/true)) {
            bprime.push_back(p);
        }
    }
    try {
        const SolveReport r = solve_mbsr_o_baseline(red, bprime, 0, ctx.smax);
        cs.offer_extended(r.best, "case1");
    } catch (const UnboundedInstance&) {
    }
    return cs.out;
}

std::vector<CsrCandidate> solve_case2(const CircleContext& ctx) {
    CandidateSet cs(ctx);
    for (Region q : kQuadrants) {
        const Envelope& env = ctx.envelope(q);
        for (const Point& p : envelope_corner_points(env, /*corners_only=*/false)) {
            Rect r = ctx.smin;
            set_corner(r, q, p);
            cs.offer_extended(r, "case2.1");

            // One-variable optimization over each opposite-quadrant arc with
            // the fixed corner supplying the supports.
            const Envelope& opp = ctx.envelope(opposite(q));
            const Point lp = opp.frame.to_local(p);
            for (const ArcRange& a : envelope_arcs(opp)) {
                const double w = a.center.x - lp.x;
                const double h = a.center.y - lp.y;
                const ArcOptResult best = optimize_arc(w, h, a.theta_lo, a.theta_hi);
                Rect cand = ctx.smin;
                set_corner(cand, q, p);
                set_corner(cand, opposite(q), opp.frame.to_world(arc_corner_local(a, best.theta)));
                cs.offer(cand, "case2.2");
            }
        }
    }
    return cs.out;
}

std::vector<CsrCandidate> solve_case3(const CircleContext& ctx) {
    CandidateSet cs(ctx);
    std::array<std::vector<Point>, 4> pts;
    for (Region q : kQuadrants) {
        pts[quadrant_index(q)] = envelope_corner_points(ctx.envelope(q), /*corners_only=*/false);
    }

    // Opposite corners fixed: the rectangle is determined.
    for (Region q : {Region::NE, Region::NW}) {
        for (const Point& a : pts[quadrant_index(q)]) {
            for (const Point& b : pts[quadrant_index(opposite(q))]) {
                Rect r = ctx.smin;
                set_corner(r, q, a);
                set_corner(r, opposite(q), b);
                cs.offer(r, "case3");
            }
        }
    }

    // Adjacent corners fixed: the shared edge takes the tighter support and
    // the opposite edge extends.
    struct Adjacent {
        Region a, b;
    };
    for (const Adjacent& adj : {Adjacent{Region::NE, Region::NW}, Adjacent{Region::NW, Region::SW},
                                Adjacent{Region::SW, Region::SE}, Adjacent{Region::SE, Region::NE}}) {
        for (const Point& pa : pts[quadrant_index(adj.a)]) {
            for (const Point& pb : pts[quadrant_index(adj.b)]) {
                Rect r = ctx.smin;
                set_corner(r, adj.a, pa);
                set_corner(r, adj.b, pb);
                // set_corner applied twice leaves the shared edge at pb's
                // value; take the tighter of the two supports.
                if (adj.a == Region::NE && adj.b == Region::NW) r.ymax = std::min(pa.y, pb.y);
                if (adj.a == Region::NW && adj.b == Region::SW) r.xmin = std::max(pa.x, pb.x);
                if (adj.a == Region::SW && adj.b == Region::SE) r.ymin = std::max(pa.y, pb.y);
                if (adj.a == Region::SE && adj.b == Region::NE) r.xmax = std::min(pa.x, pb.x);
                cs.offer_extended(r, "case3");
            }
        }
    }
    return cs.out;
}

std::vector<CsrCandidate> solve_case4(const CircleContext& ctx) {
    CandidateSet cs(ctx);

    // A single sliding corner: supports taken from the greedily extended
    // rectangle at the arc midpoint, then the one-variable optimizer.
    for (Region q : kQuadrants) {
        const Envelope& env = ctx.envelope(q);
        for (const ArcRange& a : envelope_arcs(env)) {
            const double mid = 0.5 * (a.theta_lo + a.theta_hi);
            Rect probe = ctx.smin;
            set_corner(probe, q, env.frame.to_world(arc_corner_local(a, mid)));
            if (!candidate_valid(probe, ctx)) continue;
            for (Region side : kSides) extend_side(probe, side, ctx);
            for (Region side : kSides) extend_side(probe, side, ctx);
            const Point lp = env.frame.to_local(get_corner(probe, opposite(q)));
            const ArcOptResult best =
                optimize_arc(a.center.x - lp.x, a.center.y - lp.y, a.theta_lo, a.theta_hi);
            Rect cand = ctx.smin;
            set_corner(cand, q, env.frame.to_world(arc_corner_local(a, best.theta)));
            cs.offer_extended(cand, "case4.1");
        }
    }

    // Two opposite sliding corners.
    for (Region q : {Region::NE, Region::NW}) {
        const Envelope& e1 = ctx.envelope(q);
        const Envelope& e2 = ctx.envelope(opposite(q));
        for (const ArcRange& a1 : envelope_arcs(e1)) {
            for (const ArcRange& a2 : envelope_arcs(e2)) {
                const double A = ctx.smin.width() + a1.center.x + a2.center.x;
                const double B = ctx.smin.height() + a1.center.y + a2.center.y;
                const ArcPairResult best =
                    optimize_arc_pair(A, B, a1.theta_lo, a1.theta_hi, a2.theta_lo, a2.theta_hi);
                Rect cand = ctx.smin;
                set_corner(cand, q, e1.frame.to_world(arc_corner_local(a1, best.theta1)));
                set_corner(cand, opposite(q), e2.frame.to_world(arc_corner_local(a2, best.theta2)));
                cs.offer(cand, "case4.2");
            }
        }
    }
    return cs.out;
}

SolveReport solve_mbsr_c(std::span<const Point> red, std::span<const UnitCircle> circles,
                         std::optional<Rect> frame) {
    const auto t0 = std::chrono::steady_clock::now();
    const CircleContext ctx = make_circle_context(red, circles, frame);

    CandidateSet cs(ctx);
    cs.offer_extended(ctx.smin, "greedy");
    std::vector<CsrCandidate> all = cs.out;
    for (auto&& group : {solve_case1(ctx, red), solve_case2(ctx), solve_case3(ctx),
                         solve_case4(ctx)}) {
        all.insert(all.end(), group.begin(), group.end());
    }

    bool found = false;
    CsrCandidate best;
    for (const CsrCandidate& c : all) {
        if (!found || c.rect.area() > best.rect.area() ||
            (c.rect.area() == best.rect.area() && rect_tuple_less(c.rect, best.rect))) {
            best = c;
            found = true;
        }
    }
    if (!found) throw UnboundedInstance("no valid candidate rectangle");

    SolveReport report;
    report.best = best.rect;
    report.outliers_used = 0;
    report.compositions_tried = static_cast<long long>(all.size());
    report.algorithm = Algorithm::Circles;
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace seprect
