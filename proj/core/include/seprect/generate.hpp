#pragma once

#include <cstdint>
#include <optional>

#include "seprect/instance.hpp"

namespace seprect {

enum class GenKind { Points, Circles };
enum class Layout { Uniform, Clustered, StaircaseAdversarial };

struct GenConfig {
    GenKind kind = GenKind::Points;
    int n = 5;   // red points
    int m = 20;  // blue points / circles
    int k = 0;
    std::uint64_t seed = 1;
    Layout layout = Layout::Uniform;
    std::optional<double> frame_half;  // frame = centered square of this half-extent
};

/// Deterministic instance for (config, seed). Circle centers are resampled
/// until the circle clears S_min; the antichain layout places ~m/4 blue
/// points per quadrant on a dominance antichain.
Instance generate_instance(const GenConfig& cfg);

}  // namespace seprect
