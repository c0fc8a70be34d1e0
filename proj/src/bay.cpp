#include "baystow/bay.hpp"

#include <algorithm>
#include <utility>

#include "baystow/error.hpp"
#include "baystow/instance.hpp"

namespace baystow {

void BayDims::check() const {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw Error(ErrorCode::InvalidDims, "bay extents must be positive, got " + to_string(*this));
}

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(c.z) + ")";
}

std::string to_string(const BayDims& d) {
    return std::to_string(d.n1) + "x" + std::to_string(d.n2) + "x" + std::to_string(d.n3);
}

std::vector<Cell> scan_order(const BayDims& dims) {
    dims.check();
    std::vector<Cell> order;
    order.reserve(dims.capacity());
    for (int z = 0; z < dims.n3; ++z)
        for (int x = 0; x < dims.n1; ++x)
            for (int y = 0; y < dims.n2; ++y)
                order.push_back(Cell{x, y, z});
    return order;
}

Arrangement::Arrangement(const BayDims& dims) : dims_(dims) {
    dims_.check();
    slots_.assign(dims_.capacity(), kEmpty);
}

ContainerId Arrangement::at(const Cell& c) const {
    if (!in_bounds(dims_, c))
        throw Error(ErrorCode::InvalidArrangement, "cell " + to_string(c) + " outside bay " + to_string(dims_));
    return slots_[scan_index(dims_, c)];
}

void Arrangement::set(const Cell& c, ContainerId id) {
    if (!in_bounds(dims_, c))
        throw Error(ErrorCode::InvalidArrangement, "cell " + to_string(c) + " outside bay " + to_string(dims_));
    slots_[scan_index(dims_, c)] = id;
}

std::size_t Arrangement::occupied_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(),
                                                  [](ContainerId id) { return id != kEmpty; }));
}

std::vector<std::size_t> Arrangement::occupied_indices() const {
    std::vector<std::size_t> out;
    out.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i] != kEmpty)
            out.push_back(i);
    return out;
}

Arrangement canonical_fill(const BayDims& dims, std::size_t count) {
    dims.check();
    if (count > dims.capacity())
        throw Error(ErrorCode::CapacityExceeded, std::to_string(count) + " containers do not fit in " +
                                                     to_string(dims) + " (capacity " +
                                                     std::to_string(dims.capacity()) + ")");
    Arrangement arr(dims);
    auto slots = arr.slots();
    for (std::size_t i = 0; i < count; ++i)
        slots[i] = static_cast<ContainerId>(i + 1);
    return arr;
}

Arrangement canonical_fill(const Instance& instance) {
    return canonical_fill(instance.dims(), instance.size());
}

Arrangement shuffle_ids(Arrangement arr, std::mt19937_64& rng, std::size_t swaps) {
    const auto occupied = arr.occupied_indices();
    if (occupied.size() < 2 || swaps == 0)
        return arr;
    auto slots = arr.slots();
    // each transposition exchanges two distinct occupied cells
    std::uniform_int_distribution<std::size_t> first(0, occupied.size() - 1);
    std::uniform_int_distribution<std::size_t> second(0, occupied.size() - 2);
    for (std::size_t s = 0; s < swaps; ++s) {
        const auto a = first(rng);
        auto b = second(rng);
        if (b >= a)
            ++b;
        std::swap(slots[occupied[a]], slots[occupied[b]]);
    }
    return arr;
}

std::string_view to_string(Constraint c) noexcept {
    switch (c) {
    case Constraint::Dims: return "dims";
    case Constraint::Permutation: return "permutation";
    case Constraint::Support: return "support";
    case Constraint::FloorOrder: return "floor-order";
    case Constraint::Occupancy: return "occupancy";
    }
    return "unknown";
}

ValidationReport validate(const Arrangement& arr, const Instance& instance) {
    ValidationReport report;
    const auto& dims = arr.dims();
    if (!(dims == instance.dims())) {
        report.push_back({Constraint::Dims, {}, -1, kEmpty,
                          "arrangement bay " + to_string(dims) + " differs from instance bay " +
                              to_string(instance.dims())});
        return report;
    }

    const auto slots = arr.slots();
    const auto count = instance.size();

    // permutation
    std::vector<std::size_t> seen(count + 1, 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto id = slots[i];
        if (id == kEmpty)
            continue;
        if (id > count) {
            report.push_back({Constraint::Permutation, cell_at(dims, i), -1, id,
                              "unknown container id " + std::to_string(id) + " at " +
                                  to_string(cell_at(dims, i))});
        } else if (++seen[id] == 2) {
            report.push_back({Constraint::Permutation, cell_at(dims, i), -1, id,
                              "container " + std::to_string(id) + " placed again at " +
                                  to_string(cell_at(dims, i))});
        }
    }
    for (std::size_t id = 1; id <= count; ++id)
        if (seen[id] == 0)
            report.push_back({Constraint::Permutation, {}, -1, static_cast<ContainerId>(id),
                              "container " + std::to_string(id) + " is not placed"});

    // support (constraint 2)
    const auto floor_size = dims.cells_per_floor();
    for (std::size_t i = floor_size; i < slots.size(); ++i) {
        if (slots[i] != kEmpty && slots[i - floor_size] == kEmpty) {
            const auto c = cell_at(dims, i);
            report.push_back({Constraint::Support, c, -1, slots[i],
                              "container " + std::to_string(slots[i]) + " at " + to_string(c) +
                                  " has no container below"});
        }
    }

    // floor monotonicity (constraint 1)
    std::vector<std::size_t> per_floor(dims.n3, 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] != kEmpty)
            ++per_floor[i / floor_size];
    for (int j = 0; j + 1 < dims.n3; ++j) {
        if (per_floor[j] < per_floor[j + 1])
            report.push_back({Constraint::FloorOrder, {}, j, kEmpty,
                              "floor " + std::to_string(j) + " holds " + std::to_string(per_floor[j]) +
                                  " containers, floor " + std::to_string(j + 1) + " holds " +
                                  std::to_string(per_floor[j + 1])});
    }

    // canonical occupancy
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const bool expected = i < count;
        const bool actual = slots[i] != kEmpty;
        if (expected != actual) {
            const auto c = cell_at(dims, i);
            report.push_back({Constraint::Occupancy, c, -1, slots[i],
                              std::string("cell ") + to_string(c) +
                                  (actual ? " is occupied but lies outside" : " is empty but lies inside") +
                                  " the canonical fill pattern"});
        }
    }
    return report;
}

std::size_t above_count(const Arrangement& arr, const Cell& c) {
    if (arr.at(c) == kEmpty)
        throw Error(ErrorCode::CellEmpty, "no container at " + to_string(c));
    std::size_t n = 0;
    for (int z = c.z + 1; z < arr.dims().n3; ++z)
        if (arr.at(Cell{c.x, c.y, z}) != kEmpty)
            ++n;
    return n;
}

std::vector<std::size_t> above_counts(const Arrangement& arr) {
    const auto& dims = arr.dims();
    const auto slots = arr.slots();
    const auto floor_size = dims.cells_per_floor();
    std::vector<std::size_t> out(slots.size(), 0);
    // top-down sweep per column: running count of occupied cells seen so far
    std::vector<std::size_t> running(floor_size, 0);
    for (std::size_t i = slots.size(); i-- > 0;) {
        const auto col = i % floor_size;
        if (slots[i] != kEmpty) {
            out[i] = running[col];
            ++running[col];
        }
    }
    return out;
}

} // namespace baystow
