#include "heptaca/grid.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace heptaca {

std::uint64_t ring_size(std::uint32_t n) {
    if (n == 0) return 1;
    if (n == 1) return 7;
    std::uint64_t a = 7, b = 21;  // ring 1, ring 2
    for (std::uint32_t k = 2; k < n; ++k) {
        std::uint64_t c = 3 * b - a;
        a = b;
        b = c;
    }
    return b;
}

std::uint64_t cell_count(std::uint32_t radius) {
    std::uint64_t total = 1;
    for (std::uint32_t n = 1; n <= radius; ++n) total += ring_size(n);
    return total;
}

std::string to_string(const CellId& c) {
    return "(" + std::to_string(c.ring) + "," + std::to_string(c.pos) + ")";
}

CellId Grid::id_of(Cell c) const {
    if (c < 0 || c >= size()) throw GridError("cell index out of range");
    auto it = std::upper_bound(ring_offset_.begin(), ring_offset_.end(), std::uint64_t(c));
    std::uint32_t ring = std::uint32_t(it - ring_offset_.begin()) - 1;
    return CellId{ring, std::uint32_t(std::uint64_t(c) - ring_offset_[ring])};
}

Cell Grid::cell(const CellId& id) const {
    if (!contains(id)) throw GridError("no such cell " + to_string(id) + " at radius " + std::to_string(radius_));
    return Cell(ring_offset_[id.ring] + id.pos);
}

bool Grid::contains(const CellId& id) const {
    return id.ring <= radius_ && id.pos < ring_size(id.ring) && (id.ring > 0 || id.pos == 0);
}

std::uint32_t Grid::ring_of(Cell c) const {
    auto it = std::upper_bound(ring_offset_.begin(), ring_offset_.end(), std::uint64_t(c));
    return std::uint32_t(it - ring_offset_.begin()) - 1;
}

std::array<Cell, 7> Grid::neighbours(Cell c) const {
    if (is_boundary(c))
        throw GridError("neighbourhood incomplete at radius " + std::to_string(radius_) +
                        " for cell " + to_string(id_of(c)));
    std::array<Cell, 7> out;
    for (int i = 0; i < 7; ++i) out[std::size_t(i)] = neighbour(c, i);
    return out;
}

int Grid::side_towards(Cell c, Cell n) const {
    for (int i = 0; i < 7; ++i)
        if (neighbour(c, i) == n) return i;
    return -1;
}

namespace {

// Construction bookkeeping: a ring is an ordered list of cells, each knowing
// whether it has one or two parents in the previous ring.
struct RingCell {
    Cell cell;
    bool two_parents;
};

}  // namespace

Grid Grid::build(std::uint32_t radius, std::uint64_t max_cells) {
    if (radius < 1) throw GridError("radius must be >= 1");
    const std::uint64_t total = cell_count(radius);
    if (total > max_cells)
        throw GridResourceError("radius " + std::to_string(radius) + " needs " + std::to_string(total) +
                                " cells, over the budget of " + std::to_string(max_cells));

    Grid g;
    g.radius_ = radius;
    g.ring_offset_.resize(radius + 2);
    g.ring_offset_[0] = 0;
    for (std::uint32_t n = 0; n <= radius; ++n)
        g.ring_offset_[n + 1] = g.ring_offset_[n] + ring_size(n);
    g.nbr_.assign(std::size_t(total) * 7, kExterior);
    g.align_.assign(std::size_t(total) * 7, -1);

    auto set_nbr = [&](Cell c, int slot, Cell n) { g.nbr_[std::size_t(c) * 7 + std::size_t(slot)] = n; };

    // Centre: the seven ring-1 cells, counter-clockwise.
    std::vector<RingCell> ring;
    for (int k = 0; k < 7; ++k) {
        set_nbr(0, k, 1 + k);
        ring.push_back({Cell(1 + k), false});
    }
    // Ring-1 cells: parent, both siblings. Upward slots are filled when ring 2
    // is laid out (slots 2..5 for one-parent cells, 2..4 for two-parent ones).
    for (int k = 0; k < 7; ++k) {
        Cell c = 1 + k;
        set_nbr(c, 0, 0);
        set_nbr(c, 1, 1 + (k + 6) % 7);
        set_nbr(c, 6, 1 + (k + 1) % 7);
    }

    for (std::uint32_t n = 1; n < radius; ++n) {
        const std::uint64_t base = g.ring_offset_[n + 1];
        const std::uint64_t parent_count = ring.size();
        std::vector<RingCell> next;
        next.reserve(std::size_t(ring_size(n + 1)));

        // Lay the new ring out counter-clockwise: walking the parent ring, each
        // step first emits the corner child shared with the previous parent,
        // then the parent's exclusive children. Parent i therefore sees, in
        // CCW order: the corner shared with parent i-1, its exclusive
        // children, the corner shared with parent i+1.
        auto upper_count = [&](std::uint64_t i) { return ring[std::size_t(i)].two_parents ? 3 : 4; };
        std::vector<std::array<Cell, 4>> uppers(parent_count);
        Cell cursor = Cell(base);
        for (std::uint64_t i = 0; i < parent_count; ++i) {
            const std::uint64_t prev = (i + parent_count - 1) % parent_count;
            Cell shared = cursor++;
            next.push_back({shared, true});
            uppers[prev][std::size_t(upper_count(prev) - 1)] = shared;
            uppers[i][0] = shared;
            const int exclusive = upper_count(i) - 2;
            for (int e = 0; e < exclusive; ++e) {
                Cell child = cursor++;
                next.push_back({child, false});
                uppers[i][std::size_t(1 + e)] = child;
                set_nbr(child, 0, ring[std::size_t(i)].cell);
            }
            set_nbr(shared, 0, ring[std::size_t(prev)].cell);  // clockwise-side parent
            set_nbr(shared, 6, ring[std::size_t(i)].cell);     // counter-clockwise-side parent
        }

        // Parents' upward slots.
        for (std::uint64_t i = 0; i < parent_count; ++i) {
            const RingCell& p = ring[std::size_t(i)];
            for (int u = 0; u < upper_count(i); ++u) set_nbr(p.cell, 2 + u, uppers[i][std::size_t(u)]);
        }
        const std::uint64_t next_count = next.size();
        for (std::uint64_t i = 0; i < next_count; ++i) {
            const RingCell& c = next[std::size_t(i)];
            Cell before = next[std::size_t((i + next_count - 1) % next_count)].cell;
            Cell after = next[std::size_t((i + 1) % next_count)].cell;
            set_nbr(c.cell, 1, before);
            set_nbr(c.cell, c.two_parents ? 5 : 6, after);
        }
        ring = std::move(next);
    }
    // Outermost ring: sibling links only; upward slots stay exterior.
    if (radius >= 1) {
        const std::uint64_t count = ring.size();
        for (std::uint64_t i = 0; i < count; ++i) {
            const RingCell& c = ring[std::size_t(i)];
            set_nbr(c.cell, 1, ring[std::size_t((i + count - 1) % count)].cell);
            set_nbr(c.cell, c.two_parents ? 5 : 6, ring[std::size_t((i + 1) % count)].cell);
        }
    }

    // Reverse-side alignment.
    for (Cell c = 0; c < g.size(); ++c) {
        for (int i = 0; i < 7; ++i) {
            Cell b = g.neighbour(c, i);
            if (b == kExterior) continue;
            int j = g.side_towards(b, c);
            if (j < 0) throw GridError("asymmetric adjacency during construction");
            g.align_[std::size_t(c) * 7 + std::size_t(i)] = std::int8_t(j);
        }
    }
    return g;
}

std::string Grid::dump() const {
    std::ostringstream os;
    for (Cell c = 0; c < size(); ++c) {
        CellId id = id_of(c);
        os << "cell " << id.ring << " " << id.pos << " :";
        for (int i = 0; i < 7; ++i) {
            Cell n = neighbour(c, i);
            if (n == kExterior)
                os << " -";
            else {
                CellId nid = id_of(n);
                os << " " << nid.ring << "." << nid.pos;
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace heptaca
