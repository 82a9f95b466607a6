#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seprect/geometry.hpp"

namespace seprect {

/// S_max among circles: each edge of smin slides outward to the first
/// tangency with a circle crossing its band, clipped to the frame.
/// Throws UnboundedInstance when an edge meets neither circle nor frame.
Rect compute_smax_circles(const Rect& smin, std::span<const UnitCircle> circles,
                          std::optional<Rect> frame = std::nullopt);

enum class EnvPieceKind { Flat, Arc };

/// One x-interval of the envelope in quadrant-local coordinates (origin at
/// the S_min corner, quadrant mapped to +x/+y). A Flat is a horizontal
/// segment at height y; an Arc follows circle `circle`:
/// y(x) = cy - sqrt(1 - (x - cx)^2) on the quarter facing the corner.
struct EnvPiece {
    EnvPieceKind kind = EnvPieceKind::Flat;
    double x0 = 0.0;
    double x1 = 0.0;
    double y = 0.0;    // Flat height
    int circle = -1;   // Arc circle index; -1 = S_max window edge
};

enum class BreakKind { Plain, Corner, ClipEnd };

struct EnvBreakpoint {
    Point p;  // local coordinates
    BreakKind kind = BreakKind::Plain;
};

/// Dominating envelope of one quadrant, clipped to the S_max window:
/// the upper boundary of corner positions p (local, p >= 0) whose
/// rectangle [0, p.x] x [0, p.y] avoids every circle. Non-increasing in y
/// left to right; vertical drops occur where a new circle takes over.
struct Envelope {
    Region quadrant = Region::NE;
    CornerFrame frame;               // world <-> local
    double bx = 0.0, by = 0.0;       // local S_max window corner
    std::vector<Point> centers;      // local centers of the quadrant circles
    std::vector<int> circle_ids;     // index into the instance circle list
    std::vector<EnvPiece> pieces;    // ascending x, covering [0, bx]
    std::vector<EnvBreakpoint> breakpoints;

    double piece_y(const EnvPiece& p, double x) const;
    /// Envelope height at x in [0, bx] (tops of vertical drops included).
    double max_y(double x) const;
    /// Largest x in [0, bx] with envelope height >= y (0 if none).
    double max_x(double y) const;
    /// Inner corners (west x, east-end y) of every arc piece: the corner
    /// position dominating the whole arc.
    std::vector<Point> arc_inner_corners() const;
};

/// Builds the envelope of one quadrant from the circles classified there.
Envelope build_envelope(std::span<const UnitCircle> circles, Region quadrant, const Rect& smin,
                        const Rect& smax);

}  // namespace seprect
