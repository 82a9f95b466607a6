#include "seprect/outlier.hpp"

#include <algorithm>

namespace seprect {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::BaselineK7: return "baseline";
        case Algorithm::PairsetK3: return "pairset";
        case Algorithm::Oracle: return "oracle";
        case Algorithm::Circles: return "circles";
    }
    return "?";
}

const std::vector<Point>& RegionPartition::side(Region r) const {
    switch (r) {
        case Region::E: return e;
        case Region::N: return n;
        case Region::W: return w;
        case Region::S: return s;
        default: throw Error("RegionPartition::side: not a side region");
    }
}

const std::vector<Point>& RegionPartition::quad(Region r) const {
    switch (r) {
        case Region::NE: return ne;
        case Region::NW: return nw;
        case Region::SW: return sw;
        case Region::SE: return se;
        default: throw Error("RegionPartition::quad: not a corner region");
    }
}

RegionPartition partition_blue(std::span<const Point> blue, const Rect& smin) {
    RegionPartition part;
    for (const Point& p : blue) {
        const Region r = classify_region(p, smin);
        switch (r) {
            case Region::E: part.e.push_back(p); break;
            case Region::N: part.n.push_back(p); break;
            case Region::W: part.w.push_back(p); break;
            case Region::S: part.s.push_back(p); break;
            case Region::NE: part.ne.push_back(p); break;
            case Region::NW: part.nw.push_back(p); break;
            case Region::SW: part.sw.push_back(p); break;
            case Region::SE: part.se.push_back(p); break;
            case Region::Inside: continue;  // unavoidable, discarded
        }
        part.outside.push_back(p);
    }
    return part;
}

namespace {

struct Prepared {
    Rect smin;
    RegionPartition part;
    SideSupports sides;
    std::optional<Rect> frame;
};

Prepared prepare(std::span<const Point> red, std::span<const Point> blue, int k,
                 const std::optional<Rect>& frame) {
    Prepared prep;
    prep.smin = smallest_enclosing_rect(red);
    if (frame) {
        if (!frame->valid() || !frame->contains_rect(prep.smin)) {
            throw InvalidInstance("frame does not contain the red bounding box");
        }
        prep.frame = frame;
    }
    prep.part = partition_blue(blue, prep.smin);
    if (!prep.frame) {
        for (Region side : {Region::E, Region::N, Region::W, Region::S}) {
            if (static_cast<int>(prep.part.side(side).size()) <= k) {
                throw UnboundedInstance(std::string("side region ") + region_name(side) +
                                        " has too few blue points and no frame is given");
            }
        }
    }
    prep.sides = build_side_supports(blue, prep.smin);
    return prep;
}

Rect smax_for_side_budgets(const Prepared& prep, int ke, int kn, int kw, int ks) {
    Rect smax{prep.sides.smax_edge(Region::W, kw), prep.sides.smax_edge(Region::S, ks),
              prep.sides.smax_edge(Region::E, ke), prep.sides.smax_edge(Region::N, kn)};
    if (prep.frame) {
        smax.xmin = std::max(smax.xmin, prep.frame->xmin);
        smax.ymin = std::max(smax.ymin, prep.frame->ymin);
        smax.xmax = std::min(smax.xmax, prep.frame->xmax);
        smax.ymax = std::min(smax.ymax, prep.frame->ymax);
    }
    return smax;
}

struct Best {
    bool found = false;
    Rect rect{};
    double area = -1.0;

    void offer(const std::optional<Rect>& r) {
        if (!r) return;
        const double a = r->area();
        if (!found || a > area || (a == area && rect_tuple_less(*r, rect))) {
            found = true;
            rect = *r;
            area = a;
        }
    }
};

}  // namespace

SolveReport solve_mbsr_o_baseline(std::span<const Point> red, std::span<const Point> blue, int k,
                                  std::optional<Rect> frame) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k < 0) throw InvalidInstance("k must be non-negative");
    Prepared prep = prepare(red, blue, k, frame);

    const StaircaseSet st_ne = build_staircases(prep.part.ne, Region::NE, k);
    const StaircaseSet st_nw = build_staircases(prep.part.nw, Region::NW, k);
    const StaircaseSet st_sw = build_staircases(prep.part.sw, Region::SW, k);
    const StaircaseSet st_se = build_staircases(prep.part.se, Region::SE, k);

    Best best;
    long long tried = 0;
    for (int ke = 0; ke <= k; ++ke)
        for (int kn = 0; kn + ke <= k; ++kn)
            for (int kw = 0; kw + kn + ke <= k; ++kw)
                for (int ks = 0; ks + kw + kn + ke <= k; ++ks) {
                    const Rect smax = smax_for_side_budgets(prep, ke, kn, kw, ks);
                    const int rest = k - ke - kn - kw - ks;
                    for (int kne = 0; kne <= rest; ++kne)
                        for (int knw = 0; knw + kne <= rest; ++knw)
                            for (int ksw = 0; ksw + knw + kne <= rest; ++ksw)
                                for (int kse = 0; kse + ksw + knw + kne <= rest; ++kse) {
                                    ++tried;
                                    best.offer(solve_staircase_problem(
                                        prep.smin, smax, st_ne.level(kne), st_nw.level(knw),
                                        st_sw.level(ksw), st_se.level(kse)));
                                }
                }
    if (!best.found) throw UnboundedInstance("no bounded candidate rectangle");

    SolveReport report;
    report.best = best.rect;
    report.outliers_used = count_blue_inside(best.rect, prep.part.outside);
    report.compositions_tried = tried;
    report.algorithm = Algorithm::BaselineK7;
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

PairGroup build_pair_group(std::span<const Point> side_pts, std::span<const Point> quad_pts,
                           Region quadrant, int k) {
    const MirrorFrame frame = mirror_frame(quadrant);
    // Side points are unconditionally dominated along one axis: the N/S
    // bands along x, the E/W bands along y. Mark that axis with -inf.
    const bool side_is_horizontal_band = quadrant == Region::NE || quadrant == Region::SW;

    std::vector<CascadePoint> pts;
    std::vector<Point> world;  // id -> world point
    pts.reserve(side_pts.size() + quad_pts.size());
    for (const Point& p : side_pts) {
        const Point c = frame.to_canonical(p);
        const int id = static_cast<int>(world.size());
        if (side_is_horizontal_band) {
            pts.push_back(CascadePoint{-kInf, c.y, id});
        } else {
            pts.push_back(CascadePoint{c.x, -kInf, id});
        }
        world.push_back(p);
    }
    for (const Point& p : quad_pts) {
        const Point c = frame.to_canonical(p);
        const int id = static_cast<int>(world.size());
        pts.push_back(CascadePoint{c.x, c.y, id});
        world.push_back(p);
    }

    auto raw = cascade_levels(std::move(pts), k);
    PairGroup group;
    group.quadrant = quadrant;
    group.levels.resize(raw.size());
    for (std::size_t t = 0; t < raw.size(); ++t) {
        PairSet& ps = group.levels[t];
        ps.quadrant = quadrant;
        ps.t = static_cast<int>(t);
        ps.chain.verts.reserve(raw[t].size());
        ps.pairs.reserve(raw[t].size());
        for (const CascadeVertex& v : raw[t]) {
            ps.chain.verts.push_back(StairVertex{
                v.x, v.y,
                v.y_src == v.event ? StairVertexKind::BluePoint : StairVertexKind::Projection});
            ps.pairs.emplace_back(world[static_cast<std::size_t>(v.y_src)],
                                  world[static_cast<std::size_t>(v.event)]);
        }
    }
    return group;
}

PairSet build_pair_sets(std::span<const Point> side_pts, std::span<const Point> quad_pts,
                        Region quadrant, int k_p, int k) {
    if (k_p > k) throw InvalidInstance("pair budget exceeds k");
    return build_pair_group(side_pts, quad_pts, quadrant, k).levels.at(static_cast<std::size_t>(k_p));
}

SolveReport solve_mbsr_o_pairset(std::span<const Point> red, std::span<const Point> blue, int k,
                                 std::optional<Rect> frame) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k < 0) throw InvalidInstance("k must be non-negative");
    Prepared prep = prepare(red, blue, k, frame);

    const PairGroup nne = build_pair_group(prep.part.n, prep.part.ne, Region::NE, k);
    const PairGroup ese = build_pair_group(prep.part.e, prep.part.se, Region::SE, k);
    const PairGroup ssw = build_pair_group(prep.part.s, prep.part.sw, Region::SW, k);
    const PairGroup wnw = build_pair_group(prep.part.w, prep.part.nw, Region::NW, k);

    // S_max at the full budget bounds every composition; the joint chains
    // enforce the actual per-pair budgets.
    const Rect smax = smax_for_side_budgets(prep, k, k, k, k);

    Best best;
    long long tried = 0;
    for (int k1 = 0; k1 <= k; ++k1)          // WNW
        for (int k2 = 0; k2 + k1 <= k; ++k2)  // ESE
            for (int k3 = 0; k3 + k2 + k1 <= k; ++k3) {  // SSW
                const int k4 = k - k1 - k2 - k3;          // NNE
                ++tried;
                best.offer(solve_staircase_problem(prep.smin, smax, nne.level(k4).chain,
                                                   wnw.level(k1).chain, ssw.level(k3).chain,
                                                   ese.level(k2).chain));
            }
    if (!best.found) throw UnboundedInstance("no bounded candidate rectangle");

    SolveReport report;
    report.best = best.rect;
    report.outliers_used = count_blue_inside(best.rect, prep.part.outside);
    report.compositions_tried = tried;
    report.algorithm = Algorithm::PairsetK3;
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace seprect
