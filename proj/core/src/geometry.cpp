#include "seprect/geometry.hpp"

#include <algorithm>

namespace seprect {

const char* region_name(Region r) {
    switch (r) {
        case Region::E: return "E";
        case Region::N: return "N";
        case Region::W: return "W";
        case Region::S: return "S";
        case Region::NE: return "NE";
        case Region::NW: return "NW";
        case Region::SW: return "SW";
        case Region::SE: return "SE";
        case Region::Inside: return "inside";
    }
    return "?";
}

bool is_side(Region r) {
    return r == Region::E || r == Region::N || r == Region::W || r == Region::S;
}

bool is_corner(Region r) {
    return r == Region::NE || r == Region::NW || r == Region::SW || r == Region::SE;
}

Rect smallest_enclosing_rect(std::span<const Point> red) {
    if (red.empty()) {
        throw InvalidInstance("smallest_enclosing_rect: empty red set");
    }
    Rect r{red[0].x, red[0].y, red[0].x, red[0].y};
    for (const Point& p : red) {
        r.xmin = std::min(r.xmin, p.x);
        r.ymin = std::min(r.ymin, p.y);
        r.xmax = std::max(r.xmax, p.x);
        r.ymax = std::max(r.ymax, p.y);
    }
    return r;
}

namespace {

Region region_from_zones(int zx, int zy) {
    if (zx > 0) {
        if (zy > 0) return Region::NE;
        if (zy < 0) return Region::SE;
        return Region::E;
    }
    if (zx < 0) {
        if (zy > 0) return Region::NW;
        if (zy < 0) return Region::SW;
        return Region::W;
    }
    if (zy > 0) return Region::N;
    if (zy < 0) return Region::S;
    return Region::Inside;
}

}  // namespace

Region classify_region(const Point& p, const Rect& smin) {
    int zx = p.x > smin.xmax ? 1 : (p.x < smin.xmin ? -1 : 0);
    int zy = p.y > smin.ymax ? 1 : (p.y < smin.ymin ? -1 : 0);
    if (zx == 0 && zy == 0) {
        // On the closed S_min. Snap boundary points to the touching edge so
        // they act as zero-distance supports; strictly interior points are
        // discarded by the callers.
        zx = p.x == smin.xmax ? 1 : (p.x == smin.xmin ? -1 : 0);
        zy = p.y == smin.ymax ? 1 : (p.y == smin.ymin ? -1 : 0);
    }
    return region_from_zones(zx, zy);
}

Region classify_region(const UnitCircle& c, const Rect& smin) {
    const double d = rect_point_distance(smin, c.center);
    if (d * d <= 1.0 + kDist2Eps) {
        return Region::Inside;  // intersects or touches S_min: discard
    }
    return classify_region(c.center, smin);
}

bool rect_contains_red(const Rect& r, const Point& p) {
    return p.x >= r.xmin && p.x <= r.xmax && p.y >= r.ymin && p.y <= r.ymax;
}

bool rect_contains_blue(const Rect& r, const Point& p) {
    return p.x > r.xmin && p.x < r.xmax && p.y > r.ymin && p.y < r.ymax;
}

double rect_point_distance(const Rect& r, const Point& p) {
    const double dx = std::max({r.xmin - p.x, 0.0, p.x - r.xmax});
    const double dy = std::max({r.ymin - p.y, 0.0, p.y - r.ymax});
    return std::hypot(dx, dy);
}

bool rect_avoids_circle(const Rect& r, const UnitCircle& c) {
    return rect_point_distance(r, c.center) >= 1.0 - kCoordEps;
}

bool rect_tuple_less(const Rect& a, const Rect& b) {
    if (a.xmin != b.xmin) return a.xmin < b.xmin;
    if (a.ymin != b.ymin) return a.ymin < b.ymin;
    if (a.xmax != b.xmax) return a.xmax < b.xmax;
    return a.ymax < b.ymax;
}

int count_blue_inside(const Rect& r, std::span<const Point> blue) {
    int n = 0;
    for (const Point& p : blue) {
        if (rect_contains_blue(r, p)) ++n;
    }
    return n;
}

MirrorFrame mirror_frame(Region corner) {
    switch (corner) {
        case Region::NE: return {1.0, 1.0};
        case Region::NW: return {-1.0, 1.0};
        case Region::SW: return {-1.0, -1.0};
        case Region::SE: return {1.0, -1.0};
        default: throw Error("mirror_frame: not a corner region");
    }
}

CornerFrame corner_frame(Region corner, const Rect& smin) {
    switch (corner) {
        case Region::NE: return {smin.xmax, smin.ymax, 1.0, 1.0};
        case Region::NW: return {smin.xmin, smin.ymax, -1.0, 1.0};
        case Region::SW: return {smin.xmin, smin.ymin, -1.0, -1.0};
        case Region::SE: return {smin.xmax, smin.ymin, 1.0, -1.0};
        default: throw Error("corner_frame: not a corner region");
    }
}

}  // namespace seprect
