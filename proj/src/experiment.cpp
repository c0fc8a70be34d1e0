#include "baystow/experiment.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>

#include "baystow/error.hpp"
#include "baystow/io.hpp"
#include "baystow/random.hpp"

namespace baystow {

namespace {

// stream tags mixed into derived seeds
constexpr std::uint64_t kInstanceStream = 0x1;
constexpr std::uint64_t kGaStream = 0x2;

std::size_t container_count(const SweepSpec& spec, std::size_t value) {
    return spec.kind == SweepKind::Containers ? value : spec.count;
}

BayDims dims_for(const SweepSpec& spec, std::size_t count) { return spec.dims ? *spec.dims : cube_for(count); }

GaConfig config_for(const SweepSpec& spec, std::size_t value) {
    GaConfig cfg = spec.ga;
    if (spec.kind == SweepKind::Generations)
        cfg.generations = value;
    if (spec.kind == SweepKind::Population)
        cfg.pop_size = value;
    return cfg;
}

} // namespace

std::string_view to_string(SweepKind kind) noexcept {
    switch (kind) {
    case SweepKind::Containers: return "containers";
    case SweepKind::Generations: return "generations";
    case SweepKind::Population: return "population";
    }
    return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view text) noexcept {
    for (auto k : {SweepKind::Containers, SweepKind::Generations, SweepKind::Population})
        if (text == to_string(k))
            return k;
    return std::nullopt;
}

BayDims cube_for(std::size_t count) {
    int n = 1;
    while (static_cast<std::size_t>(n) * n * n < count)
        ++n;
    return BayDims{n, n, n};
}

void SweepSpec::check() const {
    if (values.empty())
        throw Error(ErrorCode::InvalidSpec, "sweep needs at least one value");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == 0)
            throw Error(ErrorCode::InvalidSpec, "swept values must be positive");
        if (k > 0 && values[k] <= values[k - 1])
            throw Error(ErrorCode::InvalidSpec, "swept values must be strictly increasing");
    }
    if (repetitions < 1)
        throw Error(ErrorCode::InvalidSpec, "repetitions must be at least 1");
    if (jobs < 1)
        throw Error(ErrorCode::InvalidSpec, "jobs must be at least 1");
    if (!(date_min > 0.0) || !(date_min <= date_max))
        throw Error(ErrorCode::InvalidSpec, "date range must satisfy 0 < min <= max");
    for (auto v : values) {
        const auto count = container_count(*this, v);
        const auto dims = dims_for(*this, count);
        if (count < 1 || count > dims.capacity())
            throw Error(ErrorCode::InvalidSpec, std::to_string(count) + " containers do not fit in bay " +
                                                    to_string(dims));
        try {
            config_for(*this, v).check();
        } catch (const Error& e) {
            throw Error(ErrorCode::InvalidSpec, std::string("at swept value ") + std::to_string(v) + ": " + e.what());
        }
    }
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
    spec.check();
    const auto reps = spec.repetitions;
    const auto tasks = spec.values.size() * reps;

    std::vector<RunSummary> runs(tasks);
    std::vector<std::exception_ptr> failures(tasks);

    auto execute = [&](std::size_t t) {
        const auto p = t / reps;
        const auto r = t % reps;
        const auto value = spec.values[p];
        try {
            const auto count = container_count(spec, value);
            GeneratorSpec gen;
            gen.dims = dims_for(spec, count);
            gen.count = count;
            gen.date_min = spec.date_min;
            gen.date_max = spec.date_max;
            // containers sweep: a fresh instance per point; otherwise one per repetition
            gen.seed = spec.kind == SweepKind::Containers
                           ? derive_seed({spec.base_seed, kInstanceStream, value, r})
                           : derive_seed({spec.base_seed, kInstanceStream, r});
            const auto instance = generate_instance(gen);
            auto cfg = config_for(spec, value);
            cfg.seed = derive_seed({spec.base_seed, kGaStream, value, r});

            RunSummary& out = runs[t];
            out.point = p;
            out.repetition = r;
            out.instance_seed = gen.seed;
            out.ga_seed = cfg.seed;
            out.stats = run(instance, cfg);
        } catch (...) {
            failures[t] = std::current_exception();
        }
    };

    const auto n = static_cast<long long>(tasks);
    if (spec.jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.jobs)
        for (long long t = 0; t < n; ++t)
            execute(static_cast<std::size_t>(t));
    } else {
        for (long long t = 0; t < n; ++t)
            execute(static_cast<std::size_t>(t));
    }

    for (std::size_t t = 0; t < tasks; ++t) {
        if (!failures[t])
            continue;
        const std::string where = std::string(to_string(spec.kind)) + " sweep, value " +
                                  std::to_string(spec.values[t / reps]) + ", repetition " +
                                  std::to_string(t % reps);
        try {
            std::rethrow_exception(failures[t]);
        } catch (const Error& e) {
            throw Error(e.code(), where + ": " + e.what());
        }
    }

    std::vector<SweepPoint> points(spec.values.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        auto& pt = points[p];
        pt.value = spec.values[p];
        for (std::size_t r = 0; r < reps; ++r) {
            auto& run = runs[p * reps + r];
            pt.mean_fi += run.stats.initial_best;
            pt.mean_ff += run.stats.final_best;
            pt.mean_elapsed_ms += run.stats.elapsed_ms;
            pt.runs.push_back(std::move(run));
        }
        const auto k = static_cast<double>(reps);
        pt.mean_fi /= k;
        pt.mean_ff /= k;
        pt.mean_elapsed_ms /= k;
    }
    return points;
}

void write_summary(std::span<const SweepPoint> points, std::ostream& os) {
    os << kSummaryHeader << '\n';
    for (const auto& p : points)
        os << p.value << ',' << format_number(p.mean_fi) << ',' << format_number(p.mean_ff) << ','
           << format_number(p.mean_elapsed_ms) << '\n';
}

void write_summary(std::span<const SweepPoint> points, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_summary(points, out);
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

} // namespace baystow
