#include <doctest.h>

#include <random>

#include "seprect/generate.hpp"
#include "seprect/oracle.hpp"
#include "seprect/outlier.hpp"

using namespace seprect;

TEST_CASE("k=0 stops at first blue coordinate per side") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const std::vector<Point> blue{{2, 0.5}, {3, 0.5}, {-1, 0.5}, {0.5, 2}, {0.5, -1}};
    const Rect frame{-2, -2, 4, 3};
    const SolveReport r = solve_mbsr_o_baseline(red, blue, 0, frame);
    CHECK(r.best == Rect{-1, -1, 2, 2});
    CHECK(r.outliers_used == 0);
}

TEST_CASE("k=1 may pass the first east blue point") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const std::vector<Point> blue{{2, 0.5}, {3, 0.5}, {-1, 0.5}, {0.5, 2}, {0.5, -1}};
    const Rect frame{-2, -2, 4, 3};
    const SolveReport r = solve_mbsr_o_baseline(red, blue, 1, frame);
    const Rect ref = oracle_mbsr_o(red, blue, 1, frame);
    CHECK(r.best.area() == ref.area());
    CHECK(r.best == ref);
    CHECK(r.outliers_used <= 1);
}

TEST_CASE("unbounded without a frame") {
    const std::vector<Point> red{{0, 0}, {1, 1}};
    const std::vector<Point> blue{{2, 0.5}};
    CHECK_THROWS_AS(solve_mbsr_o_baseline(red, blue, 0, std::nullopt), UnboundedInstance);
    CHECK_THROWS_AS(solve_mbsr_o_baseline(red, blue, 1, std::nullopt), UnboundedInstance);
}

TEST_CASE("invalid inputs") {
    const std::vector<Point> none;
    CHECK_THROWS_AS(solve_mbsr_o_baseline(none, none, 0, Rect{0, 0, 1, 1}), InvalidInstance);
    const std::vector<Point> red{{0, 0}, {5, 5}};
    CHECK_THROWS_AS(solve_mbsr_o_baseline(red, none, 0, Rect{0, 0, 1, 1}), InvalidInstance);
}

TEST_CASE("blue inside S_min is discarded, not charged") {
    const std::vector<Point> red{{0, 0}, {4, 4}};
    const std::vector<Point> blue{{2, 2}, {1, 3}, {5, 2}, {-1, 2}, {2, 5}, {2, -1}};
    const Rect frame{-2, -2, 6, 6};
    const SolveReport r = solve_mbsr_o_baseline(red, blue, 0, frame);
    // The two interior points are unavoidable; the four outside points pin
    // the k=0 answer at their coordinates.
    CHECK(r.best == Rect{-1, -1, 5, 5});
}

TEST_CASE("baseline equals oracle and pairset on random instances") {
    for (int i = 0; i < 60; ++i) {
        GenConfig cfg;
        cfg.n = 2 + i % 6;
        cfg.m = 5 + (i * 3) % 21;
        cfg.k = i % 5;
        cfg.seed = 300 + static_cast<std::uint64_t>(i);
        cfg.layout = static_cast<Layout>(i % 3);
        cfg.frame_half = 15.0;
        const Instance inst = generate_instance(cfg);
        const SolveReport base = solve_mbsr_o_baseline(inst.red, *inst.blue_points, cfg.k, inst.frame);
        const SolveReport pair = solve_mbsr_o_pairset(inst.red, *inst.blue_points, cfg.k, inst.frame);
        const Rect ref = oracle_mbsr_o(inst.red, *inst.blue_points, cfg.k, *inst.frame);
        CHECK(base.best.area() == ref.area());
        CHECK(pair.best.area() == base.best.area());
        CHECK(base.best.contains_rect(smallest_enclosing_rect(inst.red)));
        // Interior blue count never exceeds k (interior points excluded).
        const Rect smin = smallest_enclosing_rect(inst.red);
        int charged = 0;
        for (const Point& p : *inst.blue_points) {
            if (rect_contains_blue(base.best, p) && !rect_contains_blue(smin, p)) ++charged;
        }
        CHECK(charged <= cfg.k);
        CHECK(pair.compositions_tried <= (cfg.k + 1) * (cfg.k + 1) * (cfg.k + 1));
    }
}

TEST_CASE("area is monotone in k") {
    GenConfig cfg;
    cfg.n = 6;
    cfg.m = 20;
    cfg.seed = 77;
    cfg.frame_half = 15.0;
    const Instance inst = generate_instance(cfg);
    double prev = -1.0;
    for (int k = 0; k <= 5; ++k) {
        const SolveReport r = solve_mbsr_o_baseline(inst.red, *inst.blue_points, k, inst.frame);
        CHECK(r.best.area() >= prev);
        prev = r.best.area();
    }
}

TEST_CASE("pair sets at level 0 reproduce the level-0 staircase") {
    std::mt19937_64 rng(13);
    std::vector<Point> side, quad;
    for (int i = 0; i < 8; ++i) {
        side.push_back(Point{4.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53),
                             4.5 + 3.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53)});
        quad.push_back(Point{4.5 + 3.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53),
                             4.5 + 3.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53)});
    }
    const PairGroup group = build_pair_group(side, quad, Region::NE, 3);
    const StaircaseSet st = build_staircases(quad, Region::NE, 3);
    for (int s = 0; s < 100; ++s) {
        const double x = 9.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const double a = group.level(0).chain.max_y(x);
        const double b = st.level(0).max_y(x);
        // The pair chain additionally carries the side points as sentinels,
        // so it can only be tighter where a side point's y binds.
        CHECK(a <= b);
    }
}

TEST_CASE("partition_blue snaps boundary to sides and drops interior") {
    const Rect smin{0, 0, 2, 2};
    const std::vector<Point> blue{{1, 1}, {1, 2}, {3, 1}, {3, 3}, {-1, -1}, {2, 2}};
    const RegionPartition part = partition_blue(blue, smin);
    CHECK(part.n.size() == 1);
    CHECK(part.e.size() == 1);
    CHECK(part.ne.size() == 2);  // (3,3) and boundary corner (2,2)
    CHECK(part.sw.size() == 1);
    CHECK(part.outside.size() == 5);
}
