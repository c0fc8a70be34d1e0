#pragma once

// Test-only helpers. These recompute quantities from coordinates directly so
// they stay independent of the library's scan-index arithmetic.

#include <cstddef>
#include <vector>

#include "baystow/bay.hpp"
#include "baystow/instance.hpp"

namespace testsupport {

/// m_i by walking each container's column upward, indexed by id - 1.
inline std::vector<std::size_t> brute_rehandles(const baystow::Arrangement& arr, std::size_t count) {
    std::vector<std::size_t> m(count, 0);
    const auto& d = arr.dims();
    for (int x = 0; x < d.n1; ++x)
        for (int y = 0; y < d.n2; ++y)
            for (int z = 0; z < d.n3; ++z) {
                const auto id = arr.at({x, y, z});
                if (id == baystow::kEmpty)
                    continue;
                std::size_t above = 0;
                for (int zz = z + 1; zz < d.n3; ++zz)
                    above += arr.at({x, y, zz}) != baystow::kEmpty;
                m[id - 1] = above;
            }
    return m;
}

inline double brute_fitness(const baystow::Arrangement& arr, const baystow::Instance& inst) {
    const auto m = brute_rehandles(arr, inst.size());
    double f = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        f += static_cast<double>(m[k]) / inst.containers()[k].delivery_date;
    return f;
}

/// Sum over columns of h(h-1)/2.
inline std::size_t column_pair_sum(const baystow::Arrangement& arr) {
    const auto& d = arr.dims();
    std::size_t total = 0;
    for (int x = 0; x < d.n1; ++x)
        for (int y = 0; y < d.n2; ++y) {
            std::size_t h = 0;
            for (int z = 0; z < d.n3; ++z)
                h += arr.at({x, y, z}) != baystow::kEmpty;
            if (h > 0)
                total += h * (h - 1) / 2;
        }
    return total;
}

inline baystow::Instance make_instance(baystow::BayDims dims, std::vector<double> dates) {
    std::vector<baystow::Container> cs;
    for (std::size_t i = 0; i < dates.size(); ++i)
        cs.push_back({static_cast<baystow::ContainerId>(i + 1), dates[i]});
    return baystow::Instance(dims, std::move(cs));
}

/// Arrangement from ids listed in scan order (0 = empty).
inline baystow::Arrangement from_scan(baystow::BayDims dims, std::vector<baystow::ContainerId> ids) {
    baystow::Arrangement arr(dims);
    auto slots = arr.slots();
    for (std::size_t i = 0; i < ids.size(); ++i)
        slots[i] = ids[i];
    return arr;
}

} // namespace testsupport
