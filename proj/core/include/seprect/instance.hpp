#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seprect/geometry.hpp"

namespace seprect {

/// On-disk problem instance. Exactly one of blue_points / blue_circles is
/// present; k and frame are optional.
struct Instance {
    std::vector<Point> red;
    std::optional<std::vector<Point>> blue_points;
    std::optional<std::vector<UnitCircle>> blue_circles;
    std::optional<int> k;
    std::optional<Rect> frame;

    bool operator==(const Instance& other) const;
};

/// Parses an instance from JSON text. Throws InvalidInstance with a
/// line/column diagnostic on malformed input; rejects NaN/Inf and negative k.
Instance parse_instance(const std::string& text);

/// Serializes with 17 significant digits so doubles round-trip bit-exactly.
std::string render_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace seprect
