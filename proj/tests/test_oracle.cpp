#include <doctest.h>

#include <cmath>

#include "seprect/oracle.hpp"

using namespace seprect;

TEST_CASE("oracle_mbsr_o: k=m returns the frame") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const std::vector<Point> blue{{2, 0.5}, {0.5, 2}, {-1, 0.5}};
    const Rect frame{-3, -3, 4, 4};
    CHECK(oracle_mbsr_o(red, blue, static_cast<int>(blue.size()), frame) == frame);
}

TEST_CASE("oracle_mbsr_o: k=0 stops at the surrounding blue points") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const std::vector<Point> blue{{2, 0.5}, {0.5, 2}, {-1, 0.5}, {0.5, -2}};
    const Rect frame{-3, -3, 4, 4};
    CHECK(oracle_mbsr_o(red, blue, 0, frame) == Rect{-1, -2, 2, 2});
}

TEST_CASE("oracle_mbsr_o: guard") {
    const std::vector<Point> red{{0, 0}};
    std::vector<Point> blue(41, Point{5, 5});
    CHECK_THROWS_AS(oracle_mbsr_o(red, blue, 0, Rect{-9, -9, 9, 9}), GuardExceeded);
}

TEST_CASE("oracle_mbsr_o is deterministic") {
    const std::vector<Point> red{{0, 0}, {2, 2}};
    const std::vector<Point> blue{{3, 1}, {1, 3}, {-1, 1}, {1, -1}, {4, 1}};
    const Rect frame{-5, -5, 6, 6};
    const Rect a = oracle_mbsr_o(red, blue, 2, frame);
    const Rect b = oracle_mbsr_o(red, blue, 2, frame);
    CHECK(a == b);
}

TEST_CASE("oracle_mbsr_c: no circles returns the frame with a tight bracket") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const Rect frame{-2, -2, 3, 3};
    const CircleOracleResult r = oracle_mbsr_c(red, {}, frame, 1e-3);
    CHECK(r.rect == frame);
    CHECK(r.lower == frame.area());
    CHECK(r.upper == doctest::Approx(frame.area()).epsilon(1e-9));
}

TEST_CASE("oracle_mbsr_c: single circle agrees with tangency algebra") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const Rect frame{-3, -3, 6, 4};
    const std::vector<UnitCircle> circles{{{4, 0.5}}};
    const CircleOracleResult r = oracle_mbsr_c(red, circles, frame, 1e-3);
    const double expect = (3.0 - -3.0) * (4.0 - -3.0);  // xmax pinned at 3
    const double slack = 2e-3 * 2 * (frame.width() + frame.height());
    CHECK(r.lower >= expect - slack);
    CHECK(r.upper >= expect - 1e-9);
    CHECK(r.lower <= expect + 1e-9);
}

TEST_CASE("oracle_mbsr_c: guard") {
    const std::vector<Point> red{{0, 0}};
    std::vector<UnitCircle> circles(11, UnitCircle{{5, 5}});
    CHECK_THROWS_AS(oracle_mbsr_c(red, circles, Rect{-9, -9, 9, 9}, 1e-2), GuardExceeded);
    CHECK_THROWS_AS(oracle_mbsr_c(red, std::vector<UnitCircle>{}, Rect{-9, -9, 9, 9}, 0.0),
                    InvalidInstance);
}

TEST_CASE("oracle_staircase_levels: single point") {
    const auto chains = oracle_staircase_levels({CascadePoint{1, 1, 0}}, 0);
    REQUIRE(chains.size() == 1);
    REQUIRE(chains[0].verts.size() == 1);
    CHECK(chains[0].verts[0].x == 1.0);
    CHECK(chains[0].verts[0].y == 1.0);
}

TEST_CASE("oracle_arc_max_1d: symmetric closed form") {
    // w = h = 2: the interior critical point pi/4 carries the closed-form
    // value (2 - sqrt(2)/2)^2; over the full quarter the endpoints win.
    const ArcOptResult pinned = oracle_arc_max_1d(2, 2, 0.7853981633974483, 0.7853981633974483);
    const double expect = (2 - std::sqrt(2.0) / 2) * (2 - std::sqrt(2.0) / 2);
    CHECK(pinned.area == doctest::Approx(expect).epsilon(1e-12));
    const ArcOptResult full = oracle_arc_max_1d(2, 2, 0, 1.5707963267948966);
    CHECK(full.area == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("oracle_arc_max_2d: symmetric pair") {
    const ArcPairResult r = oracle_arc_max_2d(5, 5, 0, 1.5707963267948966, 0, 1.5707963267948966);
    // Symmetric instance: the optimum sits on the mirrored diagonal
    // t1 = pi/2 - t2 with area (5 - sin - sin)(5 - cos - cos) = 16.
    CHECK(r.theta1 == doctest::Approx(1.5707963267948966 - r.theta2).epsilon(1e-4));
    CHECK(r.area == doctest::Approx(16.0).epsilon(1e-6));
}
