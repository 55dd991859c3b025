#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace heptaca {

// Address of a heptagon: ring 0 is the central cell, ring n >= 1 holds
// ring_size(n) cells indexed counter-clockwise.
struct CellId {
    std::uint32_t ring = 0;
    std::uint32_t pos = 0;

    friend bool operator==(const CellId&, const CellId&) = default;
    friend auto operator<=>(const CellId&, const CellId&) = default;
};

// Number of cells on ring n: 1, 7, 21, then r(n+1) = 3 r(n) - r(n-1).
std::uint64_t ring_size(std::uint32_t n);

// 1 + sum of ring sizes up to and including `radius`.
std::uint64_t cell_count(std::uint32_t radius);

std::string to_string(const CellId& c);

}  // namespace heptaca

template <>
struct std::hash<heptaca::CellId> {
    std::size_t operator()(const heptaca::CellId& c) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(c.ring) << 32) | c.pos);
    }
};
