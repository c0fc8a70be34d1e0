#include "baystow/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "baystow/error.hpp"

namespace baystow {

OracleResult exhaustive_optimum(const Instance& instance) {
    const auto count = instance.size();
    if (count > kExhaustiveLimit)
        throw Error(ErrorCode::TooLarge, std::to_string(count) + " containers exceed the exhaustive limit of " +
                                             std::to_string(kExhaustiveLimit));
    const auto base = canonical_fill(instance);
    const auto above = above_counts(base);
    const auto priority = instance.priorities();

    // perm[k] = id - 1 placed at scan position k
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> best_perm = perm;
    double best = -1.0;
    std::vector<std::size_t> m(count);
    do {
        for (std::size_t k = 0; k < count; ++k)
            m[perm[k]] = above[k];
        double value = 0.0;
        for (std::size_t id = 0; id < count; ++id)
            value += priority[id] * static_cast<double>(m[id]);
        if (best < 0.0 || value < best) {
            best = value;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    OracleResult result;
    result.optimum = std::max(best, 0.0);
    result.witness = base;
    auto slots = result.witness.slots();
    for (std::size_t k = 0; k < count; ++k)
        slots[k] = static_cast<ContainerId>(best_perm[k] + 1);
    return result;
}

OracleResult rearrangement_optimum(const Instance& instance) {
    const auto count = instance.size();
    const auto base = canonical_fill(instance);
    const auto above = above_counts(base);
    const auto priority = instance.priorities();

    std::vector<std::size_t> cells(count);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    std::stable_sort(cells.begin(), cells.end(),
                     [&](std::size_t a, std::size_t b) { return above[a] < above[b]; });

    std::vector<std::size_t> ids(count);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::stable_sort(ids.begin(), ids.end(),
                     [&](std::size_t a, std::size_t b) { return priority[a] > priority[b]; });

    OracleResult result;
    result.witness = base;
    auto slots = result.witness.slots();
    double total = 0.0;
    for (std::size_t r = 0; r < count; ++r) {
        slots[cells[r]] = static_cast<ContainerId>(ids[r] + 1);
        total += priority[ids[r]] * static_cast<double>(above[cells[r]]);
    }
    result.optimum = total;
    return result;
}

} // namespace baystow
