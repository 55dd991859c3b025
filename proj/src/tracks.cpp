#include "heptaca/tracks.hpp"

namespace heptaca {

const char* element_name(ElementKind k) {
    switch (k) {
        case ElementKind::standard: return "standard";
        case ElementKind::turn: return "turn";
        case ElementKind::junction: return "junction";
    }
    return "?";
}

void Stamper::require_interior(Cell cell) const {
    if (cell == kExterior || !grid_->is_interior(cell))
        throw PlacementError("footprint reaches the boundary ring at radius " +
                             std::to_string(grid_->radius()));
}

void Stamper::require(Cell cell, State s) {
    require_interior(cell);
    auto [it, inserted] = required_.try_emplace(cell, s);
    if (!inserted && it->second != s)
        throw PlacementError("cell " + to_string(grid_->id_of(cell)) + " already holds " +
                                 std::string(1, to_char(it->second)) + ", cannot stamp " +
                                 std::string(1, to_char(s)),
                             {grid_->id_of(cell)});
    if (s != State::W) config_->set(cell, s);
}

namespace {

struct ElementSpec {
    int entry_side;
    int exit_side;
    std::initializer_list<int> milestones;
};

const ElementSpec& spec_for(ElementKind k) {
    static const ElementSpec standard{2, 7, {1, 3, 6}};
    static const ElementSpec turn{7, 2, {1, 3, 4, 6}};
    static const ElementSpec junction{5, 2, {1, 3, 4, 6, 7}};
    switch (k) {
        case ElementKind::turn: return turn;
        case ElementKind::junction: return junction;
        default: return standard;
    }
}

}  // namespace

int side_dir(ElementKind kind, int entry_dir, int side) {
    return Grid::mod7(entry_dir + side - spec_for(kind).entry_side);
}

TrackElement stamp_element(Stamper& st, ElementKind kind, Cell cell, int entry_dir) {
    const Grid& g = st.grid();
    const ElementSpec& sp = spec_for(kind);
    st.require_interior(cell);

    TrackElement el;
    el.kind = kind;
    el.cell = cell;
    el.entry_dir = Grid::mod7(entry_dir);
    el.exit_dir = side_dir(kind, entry_dir, sp.exit_side);
    el.entry_cell = g.neighbour(cell, el.entry_dir);
    el.exit_cell = g.neighbour(cell, el.exit_dir);

    st.require(cell, State::W);
    for (int side = 1; side <= 7; ++side) {
        Cell n = g.neighbour(cell, side_dir(kind, entry_dir, side));
        bool milestone = false;
        for (int m : sp.milestones) milestone |= (m == side);
        st.require(n, milestone ? State::B : State::W);
        if (milestone) el.milestones.push_back(n);
    }
    return el;
}

TrackElement stamp_element(const Grid& grid, ElementKind kind, Cell cell, int entry_dir,
                           Configuration& config) {
    Stamper st(grid, config);
    return stamp_element(st, kind, cell, entry_dir);
}

TrackHead next_head(const Grid& grid, const TrackHead& head, ElementKind kind) {
    int exit_dir = side_dir(kind, head.entry_dir, spec_for(kind).exit_side);
    Cell next = grid.neighbour(head.cell, exit_dir);
    if (next == kExterior)
        throw PlacementError("track runs off the grid at radius " + std::to_string(grid.radius()));
    return TrackHead{next, grid.alignment(head.cell, exit_dir)};
}

TrackHead lay_elements(Stamper& st, TrackHead head, const std::vector<ElementKind>& kinds,
                       TrackPath& path) {
    for (ElementKind k : kinds) {
        TrackElement el = stamp_element(st, k, head.cell, head.entry_dir);
        path.cells.push_back(el.cell);
        head = next_head(st.grid(), head, k);
        path.elements.push_back(std::move(el));
    }
    return head;
}

TrackPath build_vertical(Stamper& st, Cell start, int entry_dir, int length) {
    if (length < 1) throw PlacementError("vertical length must be >= 1");
    std::vector<ElementKind> kinds;
    int in_fan = 0;
    for (int i = 0; i < length; ++i) {
        if (in_fan == kVerticalFan) {
            kinds.push_back(ElementKind::turn);
            in_fan = 0;
        } else {
            kinds.push_back(ElementKind::standard);
            ++in_fan;
        }
    }
    TrackPath path;
    lay_elements(st, TrackHead{start, entry_dir}, kinds, path);
    return path;
}

TrackPath build_vertical(const Grid& grid, Cell start, int entry_dir, int length,
                         Configuration& config) {
    Stamper st(grid, config);
    return build_vertical(st, start, entry_dir, length);
}

TrackPath build_horizontal(Stamper& st, Cell start, int entry_dir, int span) {
    if (span < 1) throw PlacementError("horizontal span must be >= 1");
    std::vector<ElementKind> kinds;
    for (int hop = 0; hop <= span; ++hop) {
        for (int i = 0; i < kHorizontalFan; ++i) kinds.push_back(ElementKind::standard);
        if (hop < span) kinds.push_back(ElementKind::junction);
    }
    TrackPath path;
    lay_elements(st, TrackHead{start, entry_dir}, kinds, path);
    return path;
}

TrackPath build_horizontal(const Grid& grid, Cell start, int entry_dir, int span,
                           Configuration& config) {
    Stamper st(grid, config);
    return build_horizontal(st, start, entry_dir, span);
}

void inject_locomotive(Configuration& config, const TrackPath& path, int count) {
    if (count != 1 && count != 2) throw std::invalid_argument("locomotive count must be 1 or 2");
    if (std::size_t(count) >= path.cells.size())
        throw PlacementError("path too short for the locomotive");
    for (Cell c : path.cells)
        if (config.get(c) != State::W)
            throw PlacementError("path already occupied");
    // A single locomotive starts on the first track cell; a double occupies
    // the first two, rear on the entry cell.
    config.set(path.cells[0], State::R);
    if (count == 2) config.set(path.cells[1], State::R);
}

}  // namespace heptaca
