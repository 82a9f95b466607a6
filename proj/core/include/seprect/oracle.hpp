#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seprect/arc_opt.hpp"
#include "seprect/geometry.hpp"
#include "seprect/staircase.hpp"

namespace seprect {

/// Brute-force MBSR-O reference: enumerates every rectangle whose edges lie
/// on blue coordinates, S_min edges, or the frame, keeps those containing
/// all red points and at most k interior blue points, and returns the
/// largest under the standard tie-break. Guard: at most 40 blue points.
Rect oracle_mbsr_o(std::span<const Point> red, std::span<const Point> blue, int k,
                   const Rect& frame);

struct CircleOracleResult {
    Rect rect{};
    double lower = 0.0;  // area of the best rectangle found
    double upper = 0.0;  // certified upper bound on the optimum area
};

/// Certified branch-and-bound MBSR-C reference over the 4-D space of edge
/// coordinates: a box is pruned when its minimum-extent rectangle already
/// hits a circle; surviving boxes are split down to grid_step resolution.
/// The optimum area lies in [lower, upper]. Guard: at most 10 circles.
CircleOracleResult oracle_mbsr_c(std::span<const Point> red, std::span<const UnitCircle> circles,
                                 const Rect& frame, double grid_step);

/// Quadratic dominance-counting reference for the staircase sweep: level t
/// holds, after each event point in (x, y) order, the (t+1)-th smallest y
/// seen so far. Canonical (NE-like) coordinates.
std::vector<LevelChain> oracle_staircase_levels(std::vector<CascadePoint> pts, int k);

/// Dense-scan + golden-section reference for the one-arc area maximum.
ArcOptResult oracle_arc_max_1d(double w, double h, double alpha, double beta);

/// Dense-grid + coordinate-descent reference for the opposite-arc-pair
/// area maximum.
ArcPairResult oracle_arc_max_2d(double a, double b, double a1, double b1, double a2, double b2);

}  // namespace seprect
