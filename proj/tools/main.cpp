#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seprect/bench.hpp"
#include "seprect/circles.hpp"
#include "seprect/generate.hpp"
#include "seprect/instance.hpp"
#include "seprect/oracle.hpp"
#include "seprect/outlier.hpp"
#include "seprect/svg.hpp"

namespace {

constexpr int kExitUnbounded = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitMismatch = 4;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw seprect::Error("cannot write " + path);
    out << content;
}

// A bounding frame for the point oracle when the instance has none: any
// bounded optimum has its edges on blue coordinates, so a generous box
// around all points cannot change the answer.
seprect::Rect synthetic_frame(const seprect::Instance& inst) {
    seprect::Rect b = seprect::smallest_enclosing_rect(inst.red);
    for (const seprect::Point& p : *inst.blue_points) {
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
    }
    return {b.xmin - 1.0, b.ymin - 1.0, b.xmax + 1.0, b.ymax + 1.0};
}

int run_solve(const std::string& input, const std::string& problem, const std::string& algorithm,
              bool verify, const std::string& svg_path, bool json_out) {
    const seprect::Instance inst = seprect::load_instance(input);

    seprect::SolveReport report;
    if (problem == "mbsr" || problem == "mbsr-o") {
        if (!inst.blue_points) {
            throw seprect::InvalidInstance(problem + " needs a blue_points instance");
        }
        const int k = problem == "mbsr" ? 0 : inst.k.value_or(0);
        if (algorithm == "baseline") {
            report = seprect::solve_mbsr_o_baseline(inst.red, *inst.blue_points, k, inst.frame);
        } else {
            report = seprect::solve_mbsr_o_pairset(inst.red, *inst.blue_points, k, inst.frame);
        }
    } else if (problem == "mbsr-c") {
        if (!inst.blue_circles) {
            throw seprect::InvalidInstance("mbsr-c needs a blue_circles instance");
        }
        report = seprect::solve_mbsr_c(inst.red, *inst.blue_circles, inst.frame);
    } else {
        throw seprect::InvalidInstance("unknown problem " + problem);
    }

    if (verify) {
        try {
            if (problem == "mbsr-c") {
                const seprect::Rect frame =
                    inst.frame ? *inst.frame
                               : seprect::compute_smax_circles(
                                     seprect::smallest_enclosing_rect(inst.red),
                                     *inst.blue_circles, std::nullopt);
                const seprect::CircleOracleResult ref =
                    seprect::oracle_mbsr_c(inst.red, *inst.blue_circles, frame, 1e-3);
                if (report.best.area() < ref.lower - 1e-6 ||
                    report.best.area() > ref.upper + 1e-6) {
                    std::cerr << "verification mismatch: area " << report.best.area()
                              << " outside oracle bracket [" << ref.lower << ", " << ref.upper
                              << "]\n";
                    return kExitMismatch;
                }
            } else {
                const int k = problem == "mbsr" ? 0 : inst.k.value_or(0);
                const seprect::Rect frame = inst.frame ? *inst.frame : synthetic_frame(inst);
                const seprect::Rect ref =
                    seprect::oracle_mbsr_o(inst.red, *inst.blue_points, k, frame);
                if (ref.area() != report.best.area()) {
                    std::cerr << "verification mismatch: area " << report.best.area()
                              << " vs oracle " << ref.area() << "\n";
                    return kExitMismatch;
                }
            }
        } catch (const seprect::GuardExceeded& e) {
            std::cerr << "verification skipped: " << e.what() << "\n";
        }
    }

    if (!svg_path.empty()) {
        write_file(svg_path, seprect::render_svg(inst, report.best));
    }

    const seprect::Rect& r = report.best;
    std::ostringstream os;
    os.precision(17);
    if (json_out) {
        os << "{\"rect\": [" << r.xmin << ", " << r.ymin << ", " << r.xmax << ", " << r.ymax
           << "], \"area\": " << r.area() << ", \"outliers_used\": " << report.outliers_used
           << ", \"algorithm\": \"" << seprect::algorithm_name(report.algorithm)
           << "\", \"elapsed_ns\": " << report.elapsed.count() << "}\n";
    } else {
        os << "rect " << r.xmin << " " << r.ymin << " " << r.xmax << " " << r.ymax << "\n"
           << "area " << r.area() << "\n"
           << "outliers_used " << report.outliers_used << "\n"
           << "algorithm " << seprect::algorithm_name(report.algorithm) << "\n";
    }
    std::cout << os.str();
    return 0;
}

int run_gen(const std::string& kind, int n, int m, int k, std::uint64_t seed,
            std::optional<double> frame_half, const std::string& layout,
            const std::string& out_path) {
    seprect::GenConfig cfg;
    cfg.kind = kind == "circles" ? seprect::GenKind::Circles : seprect::GenKind::Points;
    cfg.n = n;
    cfg.m = m;
    cfg.k = k;
    cfg.seed = seed;
    cfg.frame_half = frame_half;
    if (layout == "clustered") {
        cfg.layout = seprect::Layout::Clustered;
    } else if (layout == "staircase-adversarial") {
        cfg.layout = seprect::Layout::StaircaseAdversarial;
    } else {
        cfg.layout = seprect::Layout::Uniform;
    }
    const std::string text = seprect::render_instance(seprect::generate_instance(cfg));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return 0;
}

std::vector<int> parse_grid(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

int run_bench_cmd(const std::string& problem, const std::string& m_grid,
                  const std::string& k_grid, int reps, const std::string& out_path,
                  std::uint64_t seed) {
    const seprect::BenchReport report =
        seprect::run_bench(problem, parse_grid(m_grid), parse_grid(k_grid), reps, seed);
    const std::string csv = seprect::bench_csv(report);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, csv);
    }
    for (const auto& [name, slope] : report.slopes) {
        std::cout << "slope " << name << " " << slope << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum bichromatic separating rectangle solver"};
    app.require_subcommand(1);

    std::string input, problem = "mbsr", algorithm = "auto", svg_path;
    bool verify = false, json_out = false;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--input", input)->required();
    solve->add_option("--problem", problem)->check(CLI::IsMember({"mbsr", "mbsr-o", "mbsr-c"}));
    solve->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"baseline", "pairset", "auto"}));
    solve->add_flag("--verify", verify);
    solve->add_option("--svg", svg_path);
    solve->add_flag("--json", json_out);

    std::string kind = "points", layout = "uniform", gen_out;
    int n = 5, m = 20, k = 0, reps = 5;
    std::uint64_t seed = 1;
    double frame_half = 0.0;
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"points", "circles"}));
    gen->add_option("--n", n);
    gen->add_option("--m", m);
    gen->add_option("--k", k);
    gen->add_option("--seed", seed);
    CLI::Option* frame_opt = gen->add_option("--frame", frame_half);
    gen->add_option("--layout", layout)
        ->check(CLI::IsMember({"uniform", "clustered", "staircase-adversarial"}));
    gen->add_option("--out", gen_out);

    std::string bench_problem = "mbsr-o", m_grid = "100,200,400,800", k_grid = "2", bench_out;
    CLI::App* bench = app.add_subcommand("bench", "time the solvers over a grid");
    bench->add_option("--problem", bench_problem)
        ->check(CLI::IsMember({"mbsr", "mbsr-o", "mbsr-c"}));
    bench->add_option("--m-grid", m_grid);
    bench->add_option("--k-grid", k_grid);
    bench->add_option("--reps", reps);
    bench->add_option("--out", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalid : 0;
    }

    if (const char* env_seed = std::getenv("SEPRECT_SEED")) {
        seed = std::strtoull(env_seed, nullptr, 10);
    }

    try {
        if (solve->parsed()) {
            return run_solve(input, problem, algorithm, verify, svg_path, json_out);
        }
        if (gen->parsed()) {
            return run_gen(kind, n, m, k, seed,
                           frame_opt->count() ? std::optional<double>(frame_half) : std::nullopt,
                           layout, gen_out);
        }
        return run_bench_cmd(bench_problem, m_grid, k_grid, reps, bench_out, seed);
    } catch (const seprect::UnboundedInstance& e) {
        std::cerr << "unbounded: " << e.what() << "\n";
        return kExitUnbounded;
    } catch (const seprect::InvalidInstance& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
