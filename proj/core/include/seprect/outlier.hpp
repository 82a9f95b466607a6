#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seprect/geometry.hpp"
#include "seprect/staircase.hpp"

namespace seprect {

/// Split of the outlier budget k across the 8 regions around S_min.
struct Composition {
    int e = 0, n = 0, w = 0, s = 0;
    int ne = 0, nw = 0, sw = 0, se = 0;

    int sum() const { return e + n + w + s + ne + nw + sw + se; }
};

enum class Algorithm { BaselineK7, PairsetK3, Oracle, Circles };

const char* algorithm_name(Algorithm a);

struct SolveReport {
    Rect best{};
    int outliers_used = 0;
    long long compositions_tried = 0;
    std::chrono::nanoseconds elapsed{0};
    Algorithm algorithm = Algorithm::BaselineK7;
};

/// Joint staircase of a side+quadrant region pair at one level t:
/// the candidate (top-or-outer support, right-or-outer support) pairs of
/// the horizontal-sweep reduction, plus the induced corner constraint.
struct PairSet {
    Region quadrant = Region::NE;  // quadrant of the pair (N+NE -> NE, ...)
    int t = 0;
    LevelChain chain;  // mirror-canonical corner constraint at level t
    std::vector<std::pair<Point, Point>> pairs;  // (y-support, x-support), world coords
};

/// All levels 0..k of one region pair, from one sweep.
struct PairGroup {
    Region quadrant = Region::NE;
    std::vector<PairSet> levels;

    const PairSet& level(int t) const { return levels.at(static_cast<std::size_t>(t)); }
};

PairGroup build_pair_group(std::span<const Point> side_pts, std::span<const Point> quad_pts,
                           Region quadrant, int k);

/// Pair set of one region pair at level k_p (k_p <= k).
PairSet build_pair_sets(std::span<const Point> side_pts, std::span<const Point> quad_pts,
                        Region quadrant, int k_p, int k);

/// MBSR-O via full composition enumeration over the 8 regions:
/// staircases are swept once, then each composition builds S_max from the
/// side supports and solves one staircase problem.
SolveReport solve_mbsr_o_baseline(std::span<const Point> red, std::span<const Point> blue, int k,
                                  std::optional<Rect> frame = std::nullopt);

/// MBSR-O via the pair-set reduction: O(k^3) combinations of budgets over
/// the four side+quadrant pairs, each solved against the joint staircases.
/// Must agree with the baseline on every instance.
SolveReport solve_mbsr_o_pairset(std::span<const Point> red, std::span<const Point> blue, int k,
                                 std::optional<Rect> frame = std::nullopt);

/// Blue points partitioned by region, S_min boundary points snapped to
/// sides, interior points dropped.
struct RegionPartition {
    std::vector<Point> e, n, w, s, ne, nw, sw, se;
    std::vector<Point> outside;  // all retained (non-interior) blue points

    const std::vector<Point>& side(Region r) const;
    const std::vector<Point>& quad(Region r) const;
};

RegionPartition partition_blue(std::span<const Point> blue, const Rect& smin);

}  // namespace seprect
