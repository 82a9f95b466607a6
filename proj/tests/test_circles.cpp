#include <doctest.h>

#include <cmath>

#include "seprect/circles.hpp"
#include "seprect/generate.hpp"
#include "seprect/oracle.hpp"

using namespace seprect;

TEST_CASE("no circles: frame is the answer") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const Rect frame{-3, -2, 4, 5};
    const SolveReport r = solve_mbsr_c(red, {}, frame);
    CHECK(r.best == frame);
}

TEST_CASE("no circles and no frame is unbounded") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(solve_mbsr_c(red, {}, std::nullopt), UnboundedInstance);
}

TEST_CASE("single east circle binds at the tangent line") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const Rect frame{-3, -3, 6, 4};
    const std::vector<UnitCircle> circles{{{4, 0.5}}};
    const SolveReport r = solve_mbsr_c(red, circles, frame);
    // The rest of the frame is free; xmax stops at the tangency x = 3.
    CHECK(r.best.xmin == doctest::Approx(-3.0));
    CHECK(r.best.ymin == doctest::Approx(-3.0));
    CHECK(r.best.ymax == doctest::Approx(4.0));
    CHECK(r.best.xmax == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("answers are valid and inside the oracle bracket") {
    for (int i = 0; i < 40; ++i) {
        GenConfig cfg;
        cfg.kind = GenKind::Circles;
        cfg.n = 2 + i % 5;
        cfg.m = 1 + i % 8;
        cfg.seed = 100 + static_cast<std::uint64_t>(i);
        cfg.layout = i % 2 ? Layout::Clustered : Layout::Uniform;
        cfg.frame_half = 9.0;
        const Instance inst = generate_instance(cfg);
        const SolveReport r = solve_mbsr_c(inst.red, *inst.blue_circles, inst.frame);
        const Rect smin = smallest_enclosing_rect(inst.red);
        CHECK(r.best.contains_rect(smin));
        std::vector<UnitCircle> kept;
        for (const UnitCircle& c : *inst.blue_circles) {
            if (classify_region(c, smin) != Region::Inside) kept.push_back(c);
        }
        for (const UnitCircle& c : kept) {
            CHECK(rect_point_distance(r.best, c.center) >= 1.0 - 1e-9);
        }
        CHECK(is_inextensible(r.best, kept, inst.frame, 1e-6));

        const double grid = 2e-3;
        const CircleOracleResult ref = oracle_mbsr_c(inst.red, *inst.blue_circles, *inst.frame, grid);
        const double slack = 2 * grid * (inst.frame->width() + inst.frame->height());
        CHECK(r.best.area() >= ref.lower - slack);
        CHECK(r.best.area() <= ref.upper + 1e-6);
    }
}

TEST_CASE("reflection equivariance") {
    GenConfig cfg;
    cfg.kind = GenKind::Circles;
    cfg.n = 5;
    cfg.m = 6;
    cfg.seed = 9;
    cfg.frame_half = 12.0;
    const Instance inst = generate_instance(cfg);
    const SolveReport base = solve_mbsr_c(inst.red, *inst.blue_circles, inst.frame);

    std::vector<Point> red_x;
    std::vector<UnitCircle> circ_x;
    for (const Point& p : inst.red) red_x.push_back({-p.x, p.y});
    for (const UnitCircle& c : *inst.blue_circles) circ_x.push_back({{-c.center.x, c.center.y}});
    const SolveReport refl = solve_mbsr_c(red_x, circ_x, inst.frame);  // frame is symmetric
    CHECK(refl.best.area() == doctest::Approx(base.best.area()).epsilon(1e-9));
    CHECK(refl.best.xmin == doctest::Approx(-base.best.xmax).epsilon(1e-9));
    CHECK(refl.best.xmax == doctest::Approx(-base.best.xmin).epsilon(1e-9));
    CHECK(refl.best.ymin == doctest::Approx(base.best.ymin).epsilon(1e-9));
    CHECK(refl.best.ymax == doctest::Approx(base.best.ymax).epsilon(1e-9));
}

TEST_CASE("max_extend respects tangencies and frame") {
    const Rect r{0, 0, 2, 1};
    const std::vector<UnitCircle> circles{{{4, 0.5}}};
    CHECK(max_extend(r, Region::E, circles, Rect{-5, -5, 9, 5}) == doctest::Approx(3.0));
    CHECK(max_extend(r, Region::E, circles, Rect{-5, -5, 2.5, 5}) == doctest::Approx(2.5));
    CHECK(max_extend(r, Region::N, circles, Rect{-5, -5, 9, 5}) == doctest::Approx(5.0));
    CHECK(max_extend(r, Region::W, {}, Rect{-5, -5, 9, 5}) == doctest::Approx(-5.0));
}

TEST_CASE("is_inextensible") {
    const std::vector<UnitCircle> circles{{{4, 0.5}}};
    const std::optional<Rect> frame = Rect{-5, -5, 9, 5};
    CHECK(is_inextensible(Rect{-5, -5, 3, 5}, circles, frame));
    CHECK(!is_inextensible(Rect{-5, -5, 2.5, 5}, circles, frame));   // east can grow
    CHECK(!is_inextensible(Rect{-5, -4.5, 3, 5}, circles, frame));   // south can grow
}

TEST_CASE("interior circles are discarded") {
    const std::vector<Point> red{{0, 0}, {4, 4}};
    const std::vector<UnitCircle> circles{{{2, 2}}, {{6.5, 2}}};
    const Rect frame{-4, -4, 9, 9};
    const SolveReport r = solve_mbsr_c(red, circles, frame);
    // Circle at (2,2) intersects S_min and is ignored; only (6.5,2)
    // constrains, pinning xmax at 5.5; everything else reaches the frame.
    CHECK(r.best.xmin == doctest::Approx(-4.0));
    CHECK(r.best.ymin == doctest::Approx(-4.0));
    CHECK(r.best.ymax == doctest::Approx(9.0));
    CHECK(r.best.xmax == doctest::Approx(5.5).epsilon(1e-9));
}
