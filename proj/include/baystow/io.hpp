#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "baystow/bay.hpp"
#include "baystow/ga.hpp"
#include "baystow/instance.hpp"

namespace baystow {

struct GeneratorSpec {
    BayDims dims{};
    std::size_t count = 1;
    double date_min = 1.0;
    double date_max = 100.0;
    std::uint64_t seed = 1;
};

/// Dates uniform in [date_min, date_max]. Throws InvalidSpec.
Instance generate_instance(const GeneratorSpec& spec);

// Instance documents:
//   {"dims": {"n1": 4, "n2": 4, "n3": 4},
//    "containers": [{"id": 1, "delivery_date": 17.5}, ...]}
// Arrangement documents:
//   {"dims": {...}, "cells": [[x, y, z, id], ...]}   (empty cells omitted)

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);
void write_instance(const Instance& instance, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);

std::string arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const std::string& text);
void write_arrangement(const Arrangement& arr, const std::filesystem::path& path);
Arrangement read_arrangement(const std::filesystem::path& path);

inline constexpr const char* kStatsHeader = "generation,best_fitness,mean_fitness,elapsed_ms";

/// One CSV row per generation. `with_timing = false` writes 0 elapsed for
/// reproducible output.
void write_stats(const RunStats& stats, std::ostream& os, bool with_timing = true);
void write_stats(const RunStats& stats, const std::filesystem::path& path, bool with_timing = true);

/// %.6g formatting used by every CSV the tools emit.
std::string format_number(double v);

} // namespace baystow
