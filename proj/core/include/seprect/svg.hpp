#pragma once

#include <optional>
#include <string>

#include "seprect/instance.hpp"

namespace seprect {

/// Deterministic SVG figure of an instance: red/blue input, S_min, S_max
/// when computable, staircases (point instances) or envelopes (circle
/// instances), and the answer rectangle if given. Y axis points up.
std::string render_svg(const Instance& inst, const std::optional<Rect>& answer);

}  // namespace seprect
