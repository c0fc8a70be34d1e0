#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "baystow/ga.hpp"

namespace baystow {

enum class SweepKind { Containers, Generations, Population };

std::string_view to_string(SweepKind kind) noexcept;
std::optional<SweepKind> parse_sweep_kind(std::string_view text) noexcept;

struct SweepSpec {
    SweepKind kind = SweepKind::Containers;
    std::vector<std::size_t> values;
    /// pop_size / generations are overridden by the swept value where relevant;
    /// seed is ignored (per-run seeds are derived from base_seed).
    GaConfig ga{};
    std::size_t repetitions = 1;
    std::uint64_t base_seed = 1;
    /// Container count for generations/population sweeps.
    std::size_t count = 64;
    /// Bay extents; unset means the smallest cube holding the containers.
    std::optional<BayDims> dims;
    double date_min = 1.0;
    double date_max = 100.0;
    /// Concurrent runs; 1 runs them one after another.
    int jobs = 1;

    /// Throws InvalidSpec.
    void check() const;
};

struct RunSummary {
    std::size_t point = 0;
    std::size_t repetition = 0;
    std::uint64_t instance_seed = 0;
    std::uint64_t ga_seed = 0;
    RunStats stats;
};

struct SweepPoint {
    std::size_t value = 0;
    double mean_fi = 0.0;
    double mean_ff = 0.0;
    double mean_elapsed_ms = 0.0;
    std::vector<RunSummary> runs;
};

/// Smallest n with n^3 >= count.
BayDims cube_for(std::size_t count);

std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSummaryHeader = "swept_value,mean_fi,mean_ff,mean_elapsed_ms";

void write_summary(std::span<const SweepPoint> points, std::ostream& os);
void write_summary(std::span<const SweepPoint> points, const std::filesystem::path& path);

} // namespace baystow
