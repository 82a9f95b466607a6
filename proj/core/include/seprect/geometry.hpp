#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seprect {

// eps policy for circle geometry: absolute on coordinates, tighter on
// squared distances. Point-based solvers compare raw coordinates, no eps.
inline constexpr double kCoordEps = 1e-9;
inline constexpr double kDist2Eps = 1e-12;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInstance : Error {
    using Error::Error;
};
struct UnboundedInstance : Error {
    using Error::Error;
};
struct GuardExceeded : Error {
    using Error::Error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct UnitCircle {
    Point center;
    static constexpr double radius = 1.0;

    friend bool operator==(const UnitCircle&, const UnitCircle&) = default;
};

/// Axis-aligned rectangle; doubles both as answer type and as S_min/S_max.
struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    bool valid() const { return xmin <= xmax && ymin <= ymax; }
    bool contains_rect(const Rect& r) const {
        return xmin <= r.xmin && ymin <= r.ymin && r.xmax <= xmax && r.ymax <= ymax;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Region { E, N, W, S, NE, NW, SW, SE, Inside };

const char* region_name(Region r);
bool is_side(Region r);
bool is_corner(Region r);

/// Bounding box of the red set. Throws InvalidInstance on an empty set.
Rect smallest_enclosing_rect(std::span<const Point> red);

/// Region of a blue point relative to S_min. Strict comparisons; a point
/// exactly on the S_min boundary is snapped to the touching side/corner
/// region with distance zero (it acts as a support, never as Inside).
Region classify_region(const Point& p, const Rect& smin);

/// Region of a blue circle: Inside iff the disk intersects or touches
/// S_min (such circles are discarded), otherwise the region of its center.
Region classify_region(const UnitCircle& c, const Rect& smin);

/// Red containment is closed: the boundary counts.
bool rect_contains_red(const Rect& r, const Point& p);

/// Blue counting uses the open interior: a point on the boundary supports
/// the rectangle instead of being contained.
bool rect_contains_blue(const Rect& r, const Point& p);

/// Distance from the closed rectangle to a point (0 if inside).
double rect_point_distance(const Rect& r, const Point& p);

/// True iff the closed rectangle and the closed disk share no point;
/// tangency counts as avoidance (eps kCoordEps).
bool rect_avoids_circle(const Rect& r, const UnitCircle& c);

/// Deterministic tie-break: lexicographic on (xmin, ymin, xmax, ymax).
bool rect_tuple_less(const Rect& a, const Rect& b);

int count_blue_inside(const Rect& r, std::span<const Point> blue);

/// Mirror-only canonical frame for a corner quadrant: multiplies
/// coordinates by +-1 so the quadrant behaves like NE (dominance = larger
/// in both axes). Negation is exact, so point solvers stay exact.
struct MirrorFrame {
    double sx = 1.0;
    double sy = 1.0;

    Point to_canonical(const Point& p) const { return {sx * p.x, sy * p.y}; }
    Point to_world(const Point& p) const { return {sx * p.x, sy * p.y}; }
};

MirrorFrame mirror_frame(Region corner);

/// Translate+mirror frame anchored at an S_min corner; used by the circle
/// solver, where floating-point eps tolerances apply anyway.
struct CornerFrame {
    double ox = 0.0;
    double oy = 0.0;
    double sx = 1.0;
    double sy = 1.0;

    Point to_local(const Point& p) const { return {sx * (p.x - ox), sy * (p.y - oy)}; }
    Point to_world(const Point& p) const { return {ox + sx * p.x, oy + sy * p.y}; }
};

CornerFrame corner_frame(Region corner, const Rect& smin);

}  // namespace seprect
