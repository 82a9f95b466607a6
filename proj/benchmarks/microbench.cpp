#include <benchmark/benchmark.h>

#include "seprect/circles.hpp"
#include "seprect/generate.hpp"
#include "seprect/outlier.hpp"
#include "seprect/staircase.hpp"

namespace {

seprect::Instance make_points(int m, int k) {
    seprect::GenConfig cfg;
    cfg.n = 10;
    cfg.m = m;
    cfg.k = k;
    cfg.seed = 7;
    cfg.frame_half = 50.0;
    return seprect::generate_instance(cfg);
}

void BM_Staircases(benchmark::State& state) {
    const auto inst = make_points(static_cast<int>(state.range(0)), 4);
    const seprect::Rect smin = seprect::smallest_enclosing_rect(inst.red);
    std::vector<seprect::Point> quad;
    for (const seprect::Point& p : *inst.blue_points) {
        if (seprect::classify_region(p, smin) == seprect::Region::NE) quad.push_back(p);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(seprect::build_staircases(quad, seprect::Region::NE, 4));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Staircases)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void BM_MbsrOBaseline(benchmark::State& state) {
    const auto inst = make_points(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            seprect::solve_mbsr_o_baseline(inst.red, *inst.blue_points, 3, inst.frame));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MbsrOBaseline)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_MbsrOPairset(benchmark::State& state) {
    const auto inst = make_points(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            seprect::solve_mbsr_o_pairset(inst.red, *inst.blue_points, 3, inst.frame));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MbsrOPairset)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_MbsrC(benchmark::State& state) {
    seprect::GenConfig cfg;
    cfg.kind = seprect::GenKind::Circles;
    cfg.n = 10;
    cfg.m = static_cast<int>(state.range(0));
    cfg.seed = 7;
    cfg.frame_half = 50.0;
    const auto inst = seprect::generate_instance(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            seprect::solve_mbsr_c(inst.red, *inst.blue_circles, inst.frame));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MbsrC)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
