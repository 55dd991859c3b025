#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "heptaca/cell.hpp"

namespace heptaca {

// Dense cell handle within a Grid. Cells are numbered ring by ring,
// position by position; the centre is cell 0.
using Cell = std::int32_t;
inline constexpr Cell kExterior = -1;

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a requested radius would exceed the configured cell budget.
struct GridResourceError : GridError {
    using GridError::GridError;
};

// The tiling {7,3} up to a chosen radius, stored as an oriented
// combinatorial map: for every cell its 7 neighbours in counter-clockwise
// order, plus, for each side, the side index under which the neighbour
// sees this cell back. Cells on the outermost ring keep exterior
// placeholders (kExterior) on their outward sides.
//
// Orientation is globally consistent: for every edge, if b = neighbour(a, i)
// and j = alignment(a, i), then neighbour(b, j + 1) = neighbour(a, i - 1).
// This pins the cyclic order around every vertex and makes "counter-
// clockwise" mean the same thing at every cell.
class Grid {
  public:
    static Grid build(std::uint32_t radius, std::uint64_t max_cells = kDefaultCellBudget);

    std::uint32_t radius() const { return radius_; }
    std::int64_t size() const { return std::int64_t(ring_offset_.back()); }

    CellId id_of(Cell c) const;
    Cell cell(const CellId& id) const;
    Cell cell(std::uint32_t ring, std::uint32_t pos) const { return cell(CellId{ring, pos}); }
    bool contains(const CellId& id) const;

    std::uint32_t ring_of(Cell c) const;
    bool is_boundary(Cell c) const { return ring_of(c) == radius_; }
    // Interior cells have their full 7-neighbourhood inside the grid.
    bool is_interior(Cell c) const { return ring_of(c) < radius_; }

    Cell neighbour(Cell c, int side) const { return nbr_[std::size_t(c) * 7 + mod7(side)]; }
    // Side index under which neighbour(c, side) sees c; -1 across the boundary.
    int alignment(Cell c, int side) const { return align_[std::size_t(c) * 7 + mod7(side)]; }

    // All 7 neighbours of c in counter-clockwise order. Throws on boundary
    // cells, whose neighbourhood is incomplete at this radius.
    std::array<Cell, 7> neighbours(Cell c) const;

    // Side of `c` facing neighbour `n`, or -1 if not adjacent.
    int side_towards(Cell c, Cell n) const;

    // Text dump `cell ring pos : n0 .. n6`, one line per cell, for golden
    // file tests. Exterior sides print as '-'.
    std::string dump() const;

    static int mod7(int k) { return ((k % 7) + 7) % 7; }

    static constexpr std::uint64_t kDefaultCellBudget = 8'000'000;

  private:
    Grid() = default;

    std::uint32_t radius_ = 0;
    std::vector<std::uint64_t> ring_offset_;  // ring r cells live at [offset[r], offset[r+1])
    std::vector<Cell> nbr_;                   // size*7
    std::vector<std::int8_t> align_;          // size*7
};

}  // namespace heptaca
