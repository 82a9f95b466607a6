#include "seprect/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace seprect {

namespace {

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * u01(rng);
}

// Box-Muller; avoids distribution objects so output is identical across
// standard libraries.
double gauss(std::mt19937_64& rng, double sigma) {
    const double u = std::max(u01(rng), 1e-300);
    const double v = u01(rng);
    return sigma * std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

constexpr Region kQuadrants[4] = {Region::NE, Region::NW, Region::SW, Region::SE};

}  // namespace

Instance generate_instance(const GenConfig& cfg) {
    if (cfg.n < 1) throw InvalidInstance("generator: need at least one red point");
    if (cfg.m < 0 || cfg.k < 0) throw InvalidInstance("generator: sizes must be non-negative");
    if (cfg.frame_half && *cfg.frame_half < 6.0) {
        throw InvalidInstance("generator: frame too small to contain the red box");
    }

    std::mt19937_64 rng(cfg.seed);
    Instance inst;
    for (int i = 0; i < cfg.n; ++i) {
        inst.red.push_back(Point{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)});
    }
    const Rect smin = smallest_enclosing_rect(inst.red);
    const double half = cfg.frame_half.value_or(20.0);
    if (cfg.frame_half) inst.frame = Rect{-half, -half, half, half};

    if (cfg.kind == GenKind::Points) {
        std::vector<Point> blue;
        switch (cfg.layout) {
            case Layout::Uniform:
                for (int i = 0; i < cfg.m; ++i) {
                    blue.push_back(Point{uniform(rng, -half, half), uniform(rng, -half, half)});
                }
                break;
            case Layout::Clustered: {
                Point centers[4];
                for (Point& c : centers) {
                    c = Point{uniform(rng, -half, half), uniform(rng, -half, half)};
                }
                for (int i = 0; i < cfg.m; ++i) {
                    const Point& c = centers[static_cast<std::size_t>(rng() % 4)];
                    blue.push_back(
                        Point{std::clamp(c.x + gauss(rng, half / 10.0), -half, half),
                              std::clamp(c.y + gauss(rng, half / 10.0), -half, half)});
                }
                break;
            }
            case Layout::StaircaseAdversarial: {
                // ~m/4 points per quadrant on a dominance antichain.
                const double span = half / 2.0;
                const double margin = 0.5;
                for (int i = 0; i < cfg.m; ++i) {
                    const Region q = kQuadrants[i % 4];
                    const int idx = i / 4;
                    const int cnt = (cfg.m - (i % 4) + 3) / 4;
                    const double t = (idx + 1.0) / (cnt + 1.0);
                    const MirrorFrame f = mirror_frame(q);
                    const Point corner{q == Region::NE || q == Region::SE ? smin.xmax : smin.xmin,
                                       q == Region::NE || q == Region::NW ? smin.ymax : smin.ymin};
                    blue.push_back(Point{corner.x + f.sx * (margin + t * span),
                                         corner.y + f.sy * (margin + (1.0 - t) * span)});
                }
                break;
            }
        }
        inst.blue_points = std::move(blue);
        inst.k = cfg.k;
        return inst;
    }

    std::vector<UnitCircle> circles;
    for (int i = 0; i < cfg.m; ++i) {
        UnitCircle c;
        bool placed = false;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            switch (cfg.layout) {
                case Layout::Clustered: {
                    const double side = static_cast<double>(rng() % 4);
                    const double base = 8.0 + uniform(rng, 0.0, half - 9.0);
                    const double along = uniform(rng, -half + 1.0, half - 1.0);
                    c.center = side < 1.0   ? Point{base, along}
                               : side < 2.0 ? Point{-base, along}
                               : side < 3.0 ? Point{along, base}
                                            : Point{along, -base};
                    break;
                }
                default:
                    c.center = Point{uniform(rng, -half + 1.0, half - 1.0),
                                     uniform(rng, -half + 1.0, half - 1.0)};
                    break;
            }
            if (classify_region(c, smin) != Region::Inside) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw InvalidInstance("generator: cannot place a circle clear of S_min");
        }
        circles.push_back(c);
    }
    inst.blue_circles = std::move(circles);
    return inst;
}

}  // namespace seprect
