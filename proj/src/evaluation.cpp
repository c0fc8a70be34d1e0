#include "baystow/evaluation.hpp"

#include <cassert>
#include <string>

#include "baystow/error.hpp"

namespace baystow {

namespace {

void require_valid(const Arrangement& arr, const Instance& instance) {
    const auto report = validate(arr, instance);
    if (!report.empty())
        throw Error(ErrorCode::InvalidArrangement,
                    report.front().message +
                        (report.size() > 1 ? " (+" + std::to_string(report.size() - 1) + " more)" : ""));
}

// Ascending-id accumulation; `m` is indexed by id - 1.
double weighted_sum(std::span<const double> priority, std::span<const std::size_t> m) {
    double total = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        total += priority[k] * static_cast<double>(m[k]);
    return total;
}

} // namespace

std::vector<std::size_t> rehandles(const Arrangement& arr, const Instance& instance) {
    require_valid(arr, instance);
    const auto above = above_counts(arr);
    const auto slots = arr.slots();
    std::vector<std::size_t> m(instance.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] != kEmpty)
            m[slots[i] - 1] = above[i];
    return m;
}

EvalResult fitness(const Arrangement& arr, const Instance& instance) {
    EvalResult result;
    result.rehandles = rehandles(arr, instance);
    const auto p = instance.priorities();
    result.fitness = weighted_sum(p, result.rehandles);
    return result;
}

FitnessKernel::FitnessKernel(const Instance& instance)
    : priority_(instance.priorities()), above_(above_counts(canonical_fill(instance))) {}

double FitnessKernel::operator()(const Arrangement& arr) const { return (*this)(arr.slots()); }

double FitnessKernel::operator()(std::span<const ContainerId> slots) const {
    assert(slots.size() == above_.size());
    thread_local std::vector<std::size_t> m;
    const auto count = priority_.size();
    m.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        assert(slots[i] != kEmpty && slots[i] <= count);
        m[slots[i] - 1] = above_[i];
    }
    return weighted_sum(priority_, m);
}

void evaluate_population_serial(const FitnessKernel& kernel, std::span<const Arrangement> pop,
                                std::span<double> out) {
    assert(out.size() >= pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i)
        out[i] = kernel(pop[i]);
}

void evaluate_population_parallel(const FitnessKernel& kernel, std::span<const Arrangement> pop,
                                  std::span<double> out, int threads) {
    assert(out.size() >= pop.size());
    const auto n = static_cast<long long>(pop.size());
#ifdef _OPENMP
    if (threads > 0) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 0; i < n; ++i)
            out[i] = kernel(pop[i]);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i)
        out[i] = kernel(pop[i]);
#else
    (void)threads;
    for (long long i = 0; i < n; ++i)
        out[i] = kernel(pop[i]);
#endif
}

} // namespace baystow
