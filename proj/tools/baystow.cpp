// baystow: solve, validate and sweep container-bay arrangements.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baystow/error.hpp"
#include "baystow/evaluation.hpp"
#include "baystow/experiment.hpp"
#include "baystow/ga.hpp"
#include "baystow/io.hpp"

namespace fs = std::filesystem;
using namespace baystow;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kViolation = 3 };

int exit_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IoError: return kParse;
    case ErrorCode::InvalidArrangement: return kViolation;
    default: return kUsage;
    }
}

BayDims parse_dims(const std::string& text) {
    BayDims d;
    char x1 = 0, x2 = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%d%c%d%c%d%n", &d.n1, &x1, &d.n2, &x2, &d.n3, &consumed) != 5 ||
        consumed != static_cast<int>(text.size()) || x1 != 'x' || x2 != 'x' || d.n1 < 1 || d.n2 < 1 || d.n3 < 1)
        throw Error(ErrorCode::InvalidConfig, "--dims expects n1xn2xn3 with positive extents, got '" + text + "'");
    return d;
}

std::pair<double, double> parse_range(const std::string& text) {
    double lo = 0, hi = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf%n", &lo, &hi, &consumed) != 2 ||
        consumed != static_cast<int>(text.size()))
        throw Error(ErrorCode::InvalidConfig, "--date-range expects lo:hi, got '" + text + "'");
    return {lo, hi};
}

struct GaFlags {
    std::uint64_t seed = 1;
    std::size_t pop_size = 50;
    std::size_t generations = 20;
    double pc = 0.8;
    double pm = 0.1;
    int threads = 1;
    bool check = false;

    void attach(CLI::App& app) {
        app.add_option("--seed", seed, "master seed")->capture_default_str();
        app.add_option("--pop-size", pop_size, "population size N")->capture_default_str();
        app.add_option("--generations", generations, "generation count")->capture_default_str();
        app.add_option("--pc", pc, "crossover probability")->capture_default_str();
        app.add_option("--pm", pm, "mutation probability per offspring")->capture_default_str();
        app.add_option("--threads", threads, "fitness evaluation threads")->capture_default_str();
        app.add_flag("--check", check, "validate every individual as it is created");
    }

    GaConfig config() const {
        GaConfig cfg;
        cfg.seed = seed;
        cfg.pop_size = pop_size;
        cfg.generations = generations;
        cfg.crossover_prob = pc;
        cfg.mutation_prob = pm;
        cfg.threads = threads;
        cfg.check_invariants = check;
        return cfg;
    }
};

void print_report(const ValidationReport& report) {
    for (const auto& v : report)
        std::cout << to_string(v.constraint) << ": " << v.message << '\n';
}

int cmd_generate(const std::string& dims_text, std::size_t count, const std::string& range,
                 std::uint64_t seed, const fs::path& out) {
    GeneratorSpec spec;
    spec.dims = parse_dims(dims_text);
    spec.count = count;
    std::tie(spec.date_min, spec.date_max) = parse_range(range);
    spec.seed = seed;
    write_instance(generate_instance(spec), out);
    std::cout << "wrote " << out.string() << '\n';
    return kOk;
}

int cmd_solve(const fs::path& instance_path, const GaFlags& flags, const fs::path& out, bool no_timing) {
    const auto instance = read_instance(instance_path);
    const auto cfg = flags.config();
    const auto stats = run(instance, cfg);

    const auto report = validate(stats.best, instance);
    if (!report.empty()) {
        print_report(report);
        return kViolation;
    }
    fs::create_directories(out);
    write_stats(stats, out / "stats.csv", !no_timing);
    write_arrangement(stats.best, out / "best.json");

    std::cout << "F_i = " << format_number(stats.initial_best) << '\n'
              << "F_f = " << format_number(stats.final_best) << '\n'
              << "elapsed_ms = " << format_number(no_timing ? 0.0 : stats.elapsed_ms) << '\n';
    return kOk;
}

int cmd_validate(const fs::path& instance_path, const fs::path& arrangement_path) {
    const auto instance = read_instance(instance_path);
    const auto arr = read_arrangement(arrangement_path);
    const auto report = validate(arr, instance);
    if (report.empty()) {
        std::cout << "valid; fitness = " << format_number(fitness(arr, instance).fitness) << '\n';
        return kOk;
    }
    print_report(report);
    return kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Container bay arrangement by genetic algorithm"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "write a random instance");
    std::string gen_dims = "4x4x4", gen_range = "1:100";
    std::size_t gen_nc = 0;
    std::uint64_t gen_seed = 1;
    fs::path gen_out;
    gen->add_option("--dims", gen_dims, "bay extents n1xn2xn3")->capture_default_str();
    gen->add_option("--nc", gen_nc, "container count (default: full bay)");
    gen->add_option("--date-range", gen_range, "delivery dates lo:hi")->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "instance file")->required();

    auto* solve = app.add_subcommand("solve", "run the GA on one instance");
    fs::path solve_instance, solve_out = "out";
    bool no_timing = false;
    GaFlags solve_flags;
    solve->add_option("instance", solve_instance, "instance file")->required();
    solve->add_option("--out", solve_out, "output directory for stats.csv and best.json")->capture_default_str();
    solve->add_flag("--no-timing", no_timing, "write zero elapsed times for byte-reproducible output");
    solve_flags.attach(*solve);

    auto* val = app.add_subcommand("validate", "check an arrangement against an instance");
    fs::path val_instance, val_arrangement;
    val->add_option("instance", val_instance, "instance file")->required();
    val->add_option("arrangement", val_arrangement, "arrangement file")->required();

    auto* sweep = app.add_subcommand("sweep", "container, generation or population sweep");
    std::string sweep_kind, sweep_dims, sweep_range = "1:100";
    std::vector<std::size_t> sweep_values;
    std::size_t sweep_reps = 1, sweep_nc = 64;
    int sweep_jobs = 1;
    bool keep_runs = false;
    fs::path sweep_out = "summary.csv";
    GaFlags sweep_flags;
    sweep->add_option("--kind", sweep_kind, "containers | generations | population")->required();
    sweep->add_option("--values", sweep_values, "swept values, comma separated")->required()->delimiter(',');
    sweep->add_option("--reps", sweep_reps, "repetitions per point")->capture_default_str();
    sweep->add_option("--nc", sweep_nc, "container count for generation/population sweeps")->capture_default_str();
    sweep->add_option("--dims", sweep_dims, "bay extents n1xn2xn3 (default: smallest cube)");
    sweep->add_option("--date-range", sweep_range, "delivery dates lo:hi")->capture_default_str();
    sweep->add_option("--jobs", sweep_jobs, "concurrent runs")->capture_default_str();
    sweep->add_option("--out", sweep_out, "summary file")->capture_default_str();
    sweep->add_flag("--keep-runs", keep_runs, "also write per-run stats next to the summary");
    sweep_flags.attach(*sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_nc == 0)
                gen_nc = parse_dims(gen_dims).capacity();
            return cmd_generate(gen_dims, gen_nc, gen_range, gen_seed, gen_out);
        }
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_flags, solve_out, no_timing);
        if (val->parsed())
            return cmd_validate(val_instance, val_arrangement);
        if (sweep->parsed()) {
            SweepSpec spec;
            const auto kind = parse_sweep_kind(sweep_kind);
            if (!kind)
                throw Error(ErrorCode::InvalidConfig, "unknown sweep kind '" + sweep_kind + "'");
            spec.kind = *kind;
            spec.values = sweep_values;
            spec.ga = sweep_flags.config();
            spec.repetitions = sweep_reps;
            spec.base_seed = sweep_flags.seed;
            spec.count = sweep_nc;
            if (!sweep_dims.empty())
                spec.dims = parse_dims(sweep_dims);
            std::tie(spec.date_min, spec.date_max) = parse_range(sweep_range);
            spec.jobs = sweep_jobs;

            const auto points = run_sweep(spec);
            if (sweep_out.has_parent_path())
                fs::create_directories(sweep_out.parent_path());
            write_summary(points, sweep_out);
            if (keep_runs) {
                const auto dir = sweep_out.parent_path() / (sweep_out.stem().string() + "_runs");
                fs::create_directories(dir);
                for (const auto& pt : points)
                    for (const auto& r : pt.runs)
                        write_stats(r.stats,
                                    dir / (std::string(to_string(spec.kind)) + "_" + std::to_string(pt.value) +
                                           "_rep" + std::to_string(r.repetition) + ".csv"));
            }
            write_summary(points, std::cout);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "baystow: " << e.what() << '\n';
        return exit_for(e);
    } catch (const fs::filesystem_error& e) {
        std::cerr << "baystow: " << e.what() << '\n';
        return kParse;
    }
    return kUsage;
}
