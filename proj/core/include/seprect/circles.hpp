#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seprect/envelope.hpp"
#include "seprect/geometry.hpp"
#include "seprect/outlier.hpp"

namespace seprect {

/// Candidate circle-separating rectangle with its originating case.
struct CsrCandidate {
    Rect rect{};
    std::string provenance;
};

/// Shared precomputation for the circle solver: S_min, S_max, the retained
/// circles (those not intersecting S_min), and the four envelopes.
struct CircleContext {
    Rect smin{};
    Rect smax{};
    std::optional<Rect> frame;
    std::vector<UnitCircle> kept;
    std::array<Envelope, 4> env;  // NE, NW, SW, SE

    const Envelope& envelope(Region quadrant) const;
};

CircleContext make_circle_context(std::span<const Point> red, std::span<const UnitCircle> circles,
                                  std::optional<Rect> frame = std::nullopt);

/// Farthest the given edge of r can move outward while r still avoids
/// every circle and stays inside the frame.
double max_extend(const Rect& r, Region side, std::span<const UnitCircle> circles,
                  const std::optional<Rect>& frame);

/// True iff no edge of r can be moved outward by more than delta.
bool is_inextensible(const Rect& r, std::span<const UnitCircle> circles,
                     const std::optional<Rect>& frame, double delta = 1e-6);

/// Three-pinned optimum: corner breakpoints and arc inner corners become a
/// finite obstacle set fed to the point solver with k = 0.
std::vector<CsrCandidate> solve_case1(const CircleContext& ctx, std::span<const Point> red);

/// Two pinned edges: every breakpoint corner, extended greedily, plus
/// breakpoint-vs-opposite-arc one-variable optimizations.
std::vector<CsrCandidate> solve_case2(const CircleContext& ctx);

/// One pinned edge: breakpoint pairs (adjacent and opposite corners) fixing
/// two or three edges, the rest extended.
std::vector<CsrCandidate> solve_case3(const CircleContext& ctx);

/// No pinned edge: corners sliding on arcs; single-arc and opposite-arc-pair
/// area maximization.
std::vector<CsrCandidate> solve_case4(const CircleContext& ctx);

/// MBSR among blue unit circles: maximum-area rectangle containing all red
/// points and avoiding every circle that does not intersect S_min.
SolveReport solve_mbsr_c(std::span<const Point> red, std::span<const UnitCircle> circles,
                         std::optional<Rect> frame = std::nullopt);

}  // namespace seprect
