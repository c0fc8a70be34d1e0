#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "baystow/bay.hpp"
#include "baystow/instance.hpp"

namespace baystow {

struct EvalResult {
    double fitness = 0.0;
    /// m_i indexed by id - 1.
    std::vector<std::size_t> rehandles;
};

/// m_i for every container: the containers stacked above it. Throws
/// InvalidArrangement if `arr` fails validation against `instance`.
std::vector<std::size_t> rehandles(const Arrangement& arr, const Instance& instance);

/// Sum of P_i * m_i, accumulated in ascending id order.
EvalResult fitness(const Arrangement& arr, const Instance& instance);

/// Precomputed evaluator for arrangements sharing the canonical occupancy of
/// one instance. Produces bitwise the same value as fitness() without
/// re-validating. Immutable after construction, shareable across threads.
class FitnessKernel {
  public:
    explicit FitnessKernel(const Instance& instance);

    double operator()(const Arrangement& arr) const;
    double operator()(std::span<const ContainerId> slots) const;

    std::span<const double> priorities() const noexcept { return priority_; }
    /// Above-count of the canonical occupancy, per scan index.
    std::span<const std::size_t> cell_above() const noexcept { return above_; }

  private:
    std::vector<double> priority_;
    std::vector<std::size_t> above_;
};

enum class ExecPolicy { Serial, Parallel };

/// Reference path: one arrangement after another.
void evaluate_population_serial(const FitnessKernel& kernel, std::span<const Arrangement> pop,
                                std::span<double> out);

/// OpenMP path; identical results to the serial path.
void evaluate_population_parallel(const FitnessKernel& kernel, std::span<const Arrangement> pop,
                                  std::span<double> out, int threads = 0);

inline void evaluate_population(const FitnessKernel& kernel, std::span<const Arrangement> pop,
                                std::span<double> out, ExecPolicy policy, int threads = 0) {
    if (policy == ExecPolicy::Parallel)
        evaluate_population_parallel(kernel, pop, out, threads);
    else
        evaluate_population_serial(kernel, pop, out);
}

} // namespace baystow
