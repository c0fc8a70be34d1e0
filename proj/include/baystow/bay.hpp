#pragma once

/// @file bay.hpp
/// @brief Bay grid, canonical scan order and the arrangement (chromosome) type.
///
/// Cells are stored in scan order: floor by floor from the ground up, then
/// along X, with Y varying fastest. Under the fixed-occupancy model, a valid
/// arrangement of Nc containers occupies exactly the first Nc scan positions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace baystow {

using ContainerId = std::uint32_t;
inline constexpr ContainerId kEmpty = 0;

struct BayDims {
    int n1 = 1; ///< cells along X
    int n2 = 1; ///< cells along Y
    int n3 = 1; ///< floors along Z

    /// Throws InvalidDims unless all three extents are positive.
    void check() const;

    std::size_t cells_per_floor() const noexcept { return static_cast<std::size_t>(n1) * n2; }
    std::size_t capacity() const noexcept { return cells_per_floor() * n3; }
    int floors() const noexcept { return n3; }

    friend bool operator==(const BayDims&, const BayDims&) = default;
};

struct Cell {
    int x = 0;
    int y = 0;
    int z = 0; ///< floor, 0 is the ground

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);
std::string to_string(const BayDims& d);

/// Position of `c` in the scan order of `dims`.
inline std::size_t scan_index(const BayDims& dims, const Cell& c) noexcept {
    return (static_cast<std::size_t>(c.z) * dims.n1 + c.x) * dims.n2 + c.y;
}

inline Cell cell_at(const BayDims& dims, std::size_t index) noexcept {
    const auto floor_size = dims.cells_per_floor();
    const auto in_floor = index % floor_size;
    return Cell{static_cast<int>(in_floor / dims.n2), static_cast<int>(in_floor % dims.n2),
                static_cast<int>(index / floor_size)};
}

inline bool in_bounds(const BayDims& dims, const Cell& c) noexcept {
    return c.x >= 0 && c.x < dims.n1 && c.y >= 0 && c.y < dims.n2 && c.z >= 0 && c.z < dims.n3;
}

/// All cells, z outermost, then x, y innermost.
std::vector<Cell> scan_order(const BayDims& dims);

class Instance;

/// Total mapping from cells to container ids (kEmpty for a free cell).
class Arrangement {
  public:
    Arrangement() = default;
    explicit Arrangement(const BayDims& dims);

    const BayDims& dims() const noexcept { return dims_; }

    ContainerId at(const Cell& c) const;
    void set(const Cell& c, ContainerId id);

    bool occupied(const Cell& c) const { return at(c) != kEmpty; }

    /// Ids in scan order, kEmpty for free cells.
    std::span<const ContainerId> slots() const noexcept { return slots_; }
    std::span<ContainerId> slots() noexcept { return slots_; }

    std::size_t occupied_count() const noexcept;
    /// Scan indices of occupied cells, ascending.
    std::vector<std::size_t> occupied_indices() const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

  private:
    BayDims dims_{};
    std::vector<ContainerId> slots_;
};

/// Ids 1..Nc placed along the first Nc cells of the scan order.
Arrangement canonical_fill(const Instance& instance);
Arrangement canonical_fill(const BayDims& dims, std::size_t count);

/// `swaps` random transpositions, each between two distinct occupied cells.
Arrangement shuffle_ids(Arrangement arr, std::mt19937_64& rng, std::size_t swaps);

enum class Constraint {
    Dims,         ///< arrangement and instance disagree on bay extents
    Permutation,  ///< id missing, duplicated or unknown
    Support,      ///< occupied cell above an empty one
    FloorOrder,   ///< floor holds fewer containers than the one above
    Occupancy,    ///< occupied set differs from the canonical fill pattern
};

std::string_view to_string(Constraint c) noexcept;

struct Violation {
    Constraint constraint;
    Cell cell{};   ///< offending cell (Support, Occupancy, Permutation)
    int floor = -1; ///< offending floor (FloorOrder)
    ContainerId id = kEmpty;
    std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const Arrangement& arr, const Instance& instance);

/// Occupied cells strictly above `c` in its column. Throws CellEmpty.
std::size_t above_count(const Arrangement& arr, const Cell& c);

/// Above-count for every scan position of an arbitrary arrangement (0 for empty cells).
std::vector<std::size_t> above_counts(const Arrangement& arr);

} // namespace baystow
