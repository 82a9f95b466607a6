#include "seprect/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "seprect/circles.hpp"
#include "seprect/generate.hpp"
#include "seprect/outlier.hpp"

namespace seprect {

namespace {

template <class F>
long long median_ns(F&& run, int reps) {
    std::vector<long long> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace

double fit_loglog_slope(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(xy.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

BenchReport run_bench(const std::string& problem, const std::vector<int>& m_grid,
                      const std::vector<int>& k_grid, int reps, std::uint64_t seed) {
    BenchReport report;
    const std::vector<int> ks = problem == "mbsr-o" && !k_grid.empty() ? k_grid
                                : problem == "mbsr-o"                  ? std::vector<int>{2}
                                                                       : std::vector<int>{0};
    for (int m : m_grid) {
        for (int k : ks) {
            GenConfig cfg;
            cfg.kind = problem == "mbsr-c" ? GenKind::Circles : GenKind::Points;
            cfg.n = 10;
            cfg.m = m;
            cfg.k = k;
            cfg.seed = seed ^ (static_cast<std::uint64_t>(m) << 20) ^
                       static_cast<std::uint64_t>(k);
            // Keep object density constant for circles so the S_max window
            // (and with it the envelope size) grows with m instead of
            // collapsing as the frame crowds up.
            cfg.frame_half =
                cfg.kind == GenKind::Circles ? 5.0 * std::sqrt(static_cast<double>(m)) : 50.0;
            const Instance inst = generate_instance(cfg);

            if (problem == "mbsr-c") {
                report.rows.push_back(BenchRow{
                    m, 0, "circles",
                    median_ns([&] { solve_mbsr_c(inst.red, *inst.blue_circles, inst.frame); },
                              reps),
                    reps});
            } else {
                report.rows.push_back(BenchRow{
                    m, k, "baseline",
                    median_ns(
                        [&] { solve_mbsr_o_baseline(inst.red, *inst.blue_points, k, inst.frame); },
                        reps),
                    reps});
                report.rows.push_back(BenchRow{
                    m, k, "pairset",
                    median_ns(
                        [&] { solve_mbsr_o_pairset(inst.red, *inst.blue_points, k, inst.frame); },
                        reps),
                    reps});
            }
        }
    }

    int kmax = 0;
    for (const BenchRow& r : report.rows) kmax = std::max(kmax, r.k);
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (const BenchRow& r : report.rows) {
        if (r.k == kmax || r.algorithm == "circles") {
            series[r.algorithm].emplace_back(static_cast<double>(r.m),
                                             static_cast<double>(r.median_ns));
        }
    }
    for (const auto& [name, xy] : series) report.slopes[name] = fit_loglog_slope(xy);
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "m,k,algorithm,median_ns,reps\n";
    for (const BenchRow& r : report.rows) {
        os << r.m << ',' << r.k << ',' << r.algorithm << ',' << r.median_ns << ',' << r.reps
           << '\n';
    }
    return os.str();
}

}  // namespace seprect
