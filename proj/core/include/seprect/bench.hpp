#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace seprect {

struct BenchRow {
    int m = 0;
    int k = 0;
    std::string algorithm;
    long long median_ns = 0;
    int reps = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    // Fitted d log(median) / d log(m) per algorithm, at the largest k.
    std::map<std::string, double> slopes;
};

/// Times the solvers for `problem` ("mbsr", "mbsr-o", or "mbsr-c") on
/// uniform random instances over the m x k grid; median of `reps` runs.
BenchReport run_bench(const std::string& problem, const std::vector<int>& m_grid,
                      const std::vector<int>& k_grid, int reps, std::uint64_t seed = 1);

/// CSV with header m,k,algorithm,median_ns,reps.
std::string bench_csv(const BenchReport& report);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<std::pair<double, double>>& xy);

}  // namespace seprect
