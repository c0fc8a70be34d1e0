#pragma once

#include "baystow/bay.hpp"
#include "baystow/instance.hpp"

namespace baystow {

struct OracleResult {
    double optimum = 0.0;
    Arrangement witness;
};

inline constexpr std::size_t kExhaustiveLimit = 8;

/// Tries all Nc! assignments over the canonical cells. Throws TooLarge above 8 containers.
OracleResult exhaustive_optimum(const Instance& instance);

/// Pairs the highest priorities with the smallest above-counts.
OracleResult rearrangement_optimum(const Instance& instance);

} // namespace baystow
