#include "seprect/staircase.hpp"

#include <algorithm>
#include <cstddef>

namespace seprect {

double LevelChain::max_y(double x) const {
    // verts ascending in x; value just left of x.
    auto it = std::lower_bound(verts.begin(), verts.end(), x,
                               [](const StairVertex& v, double xq) { return v.x < xq; });
    if (it == verts.begin()) return kInf;
    return std::prev(it)->y;
}

std::size_t StaircaseSet::total_vertices() const {
    std::size_t n = 0;
    for (const LevelChain& c : levels) n += c.verts.size();
    return n;
}

std::vector<std::vector<CascadeVertex>> cascade_levels(std::vector<CascadePoint> pts, int k) {
    std::sort(pts.begin(), pts.end(), [](const CascadePoint& a, const CascadePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::vector<std::vector<CascadeVertex>> levels(static_cast<std::size_t>(k) + 1);

    struct Entry {
        double y;
        int id;
    };
    std::vector<Entry> low;  // ascending y, the k+1 smallest seen so far
    low.reserve(static_cast<std::size_t>(k) + 1);

    for (const CascadePoint& p : pts) {
        auto it = std::lower_bound(low.begin(), low.end(), p.y,
                                   [](const Entry& e, double y) { return e.y < y; });
        const int pos = static_cast<int>(it - low.begin());
        if (pos > k) continue;  // does not enter the k+1 smallest
        low.insert(it, Entry{p.y, p.id});
        if (static_cast<int>(low.size()) > k + 1) low.pop_back();
        // Levels pos..end shifted: record the new value of each.
        for (int t = pos; t < static_cast<int>(low.size()); ++t) {
            levels[static_cast<std::size_t>(t)].push_back(
                CascadeVertex{p.x, low[static_cast<std::size_t>(t)].y,
                              low[static_cast<std::size_t>(t)].id, p.id});
        }
    }
    return levels;
}

StaircaseSet build_staircases(std::span<const Point> blue_quadrant, Region quadrant, int k) {
    StaircaseSet set;
    set.quadrant = quadrant;
    set.k = k;
    set.frame = mirror_frame(quadrant);

    std::vector<CascadePoint> pts;
    pts.reserve(blue_quadrant.size());
    for (std::size_t i = 0; i < blue_quadrant.size(); ++i) {
        const Point c = set.frame.to_canonical(blue_quadrant[i]);
        pts.push_back(CascadePoint{c.x, c.y, static_cast<int>(i)});
    }

    auto raw = cascade_levels(std::move(pts), k);
    set.levels.resize(raw.size());
    for (std::size_t t = 0; t < raw.size(); ++t) {
        set.levels[t].verts.reserve(raw[t].size());
        for (const CascadeVertex& v : raw[t]) {
            set.levels[t].verts.push_back(StairVertex{
                v.x, v.y,
                v.y_src == v.event ? StairVertexKind::BluePoint : StairVertexKind::Projection});
        }
    }
    return set;
}

double SideSupports::smax_edge(Region side, int budget) const {
    const std::vector<double>* arr = nullptr;
    double unbounded = 0.0;
    switch (side) {
        case Region::E: arr = &e; unbounded = kInf; break;
        case Region::N: arr = &n; unbounded = kInf; break;
        case Region::W: arr = &w; unbounded = -kInf; break;
        case Region::S: arr = &s; unbounded = -kInf; break;
        default: throw Error("smax_edge: not a side region");
    }
    if (budget < static_cast<int>(arr->size())) return (*arr)[static_cast<std::size_t>(budget)];
    return unbounded;
}

SideSupports build_side_supports(std::span<const Point> blue, const Rect& smin) {
    SideSupports s;
    for (const Point& p : blue) {
        switch (classify_region(p, smin)) {
            case Region::E: s.e.push_back(p.x); break;
            case Region::N: s.n.push_back(p.y); break;
            case Region::W: s.w.push_back(p.x); break;
            case Region::S: s.s.push_back(p.y); break;
            default: break;
        }
    }
    std::sort(s.e.begin(), s.e.end());
    std::sort(s.n.begin(), s.n.end());
    std::sort(s.w.begin(), s.w.end(), std::greater<double>());
    std::sort(s.s.begin(), s.s.end(), std::greater<double>());
    return s;
}

namespace {

// Candidate abscissae for one canonical edge variable: the smax bound plus
// every chain vertex inside [lo, hi].
void collect_candidates(const LevelChain& a, const LevelChain& b, double lo, double hi,
                        std::vector<double>& out) {
    out.clear();
    out.push_back(hi);
    out.push_back(lo);
    for (const LevelChain* c : {&a, &b}) {
        for (const StairVertex& v : c->verts) {
            if (v.x >= lo && v.x <= hi) out.push_back(v.x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

std::optional<Rect> solve_staircase_problem(const Rect& smin, const Rect& smax,
                                            const LevelChain& ne, const LevelChain& nw,
                                            const LevelChain& sw, const LevelChain& se) {
    // Canonical edge variables: u2 = xmax, u1 = -xmin, v2 = ymax, v1 = -ymin.
    const double u2_lo = smin.xmax, u2_hi = smax.xmax;
    const double u1_lo = -smin.xmin, u1_hi = -smax.xmin;
    const double v2_lo = smin.ymax, v2_hi = smax.ymax;
    const double v1_lo = -smin.ymin, v1_hi = -smax.ymin;
    if (u2_hi < u2_lo || u1_hi < u1_lo || v2_hi < v2_lo || v1_hi < v1_lo) {
        return std::nullopt;  // smin not inside smax: this composition is void
    }

    std::vector<double> u2c, u1c;
    collect_candidates(ne, se, u2_lo, u2_hi, u2c);
    collect_candidates(nw, sw, u1_lo, u1_hi, u1c);

    bool found = false;
    Rect best{};
    double best_area = -1.0;
    for (const double u1 : u1c) {
        const double v2_w = std::min(v2_hi, nw.max_y(u1));
        const double v1_w = std::min(v1_hi, sw.max_y(u1));
        if (v2_w < v2_lo || v1_w < v1_lo) continue;
        for (const double u2 : u2c) {
            const double v2 = std::min(v2_w, ne.max_y(u2));
            const double v1 = std::min(v1_w, se.max_y(u2));
            if (v2 < v2_lo || v1 < v1_lo) continue;
            const double area = (u1 + u2) * (v1 + v2);
            const Rect r{-u1, -v1, u2, v2};
            if (!found || area > best_area ||
                (area == best_area && rect_tuple_less(r, best))) {
                found = true;
                best = r;
                best_area = area;
            }
        }
    }
    if (!found) return std::nullopt;
    return best;
}

}  // namespace seprect
