#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "seprect/geometry.hpp"

namespace seprect {

enum class StairVertexKind { BluePoint, Projection };

/// Vertex of a t-level staircase in mirror-canonical coordinates (the
/// quadrant reflected so it behaves like NE). Either a blue point of the
/// quadrant or the sweep-line projection of one.
struct StairVertex {
    double x = 0.0;
    double y = 0.0;
    StairVertexKind kind = StairVertexKind::BluePoint;
};

/// Monotone staircase for one level t, stored as the step function
/// max_y(X) = largest admissible corner Y for corner abscissa X.
/// Vertices are ascending in x with non-increasing y.
struct LevelChain {
    std::vector<StairVertex> verts;

    /// Value of the step function just left of X: y of the last vertex
    /// with vx < X, or +inf while fewer than t+1 points are to the left.
    double max_y(double x) const;

    bool empty() const { return verts.empty(); }
};

/// All t-level staircases of one quadrant, t in [0..k], built by a single
/// left-to-right sweep with a (k+1)-entry cascade.
struct StaircaseSet {
    Region quadrant = Region::NE;
    int k = 0;
    MirrorFrame frame;
    std::vector<LevelChain> levels;  // size k+1

    const LevelChain& level(int t) const { return levels.at(static_cast<std::size_t>(t)); }
    std::size_t total_vertices() const;
};

/// Input to the shared cascade sweep. Coordinates are canonical; -inf in
/// either axis marks a side-region point that is always dominated along
/// that axis (used by the pair-set reduction).
struct CascadePoint {
    double x = 0.0;
    double y = 0.0;
    int id = -1;
};

struct CascadeVertex {
    double x = 0.0;
    double y = 0.0;
    int y_src = -1;   // id of the point whose y defines the level here
    int event = -1;   // id of the event point whose x triggered the change
};

/// One sweep computing every level t <= k: sort by x, insert each event
/// into the ascending list of the k+1 smallest y seen, and record a vertex
/// for every level whose value changes.
std::vector<std::vector<CascadeVertex>> cascade_levels(std::vector<CascadePoint> pts, int k);

/// Staircases of one quadrant from its blue points (world coordinates).
StaircaseSet build_staircases(std::span<const Point> blue_quadrant, Region quadrant, int k);

/// Per-side sorted support coordinates: the edge coordinate S_max gets
/// when a side region is granted a given outlier budget.
struct SideSupports {
    // Outward-sorted world coordinates: E ascending x, W descending x,
    // N ascending y, S descending y.
    std::vector<double> e, n, w, s;

    /// Edge coordinate of S_max for the (budget+1)-th closest support;
    /// +-inf when the side has too few blue points.
    double smax_edge(Region side, int budget) const;
};

SideSupports build_side_supports(std::span<const Point> blue, const Rect& smin);

/// Largest rectangle with smin <= r <= smax whose corners respect the four
/// level chains (mirror-canonical, one per quadrant). nullopt when
/// smin is not inside smax (infeasible composition).
/// Ties broken lexicographically on (xmin, ymin, xmax, ymax).
std::optional<Rect> solve_staircase_problem(const Rect& smin, const Rect& smax,
                                            const LevelChain& ne, const LevelChain& nw,
                                            const LevelChain& sw, const LevelChain& se);

}  // namespace seprect
