#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heptaca/engine.hpp"
#include "heptaca/grid.hpp"

namespace heptaca {

// Track elements. Each is a single cell the locomotive crosses, with blue
// milestones on fixed sides of a per-cell frame. Sides are numbered 1..7
// counter-clockwise; the frame is anchored by where the previous track cell
// sits (the entry):
//
//   standard  milestones 1,3,6    entry side 2, exit side 7
//   turn      milestones 1,3,4,6  entry side 7, exit side 2
//   junction  milestones 1,3,4,6,7  entry side 5, exit side 2
//
// Side 1 of a standard element faces the pivot the chain winds around;
// consecutive standard elements share that pivot, a turn hops to the next
// pivot along a branch, a junction hops between pivots along a level.
enum class ElementKind { standard, turn, junction };

const char* element_name(ElementKind k);

struct PlacementError : std::runtime_error {
    std::vector<CellId> conflicts;
    explicit PlacementError(std::string msg, std::vector<CellId> cells = {})
        : std::runtime_error(std::move(msg)), conflicts(std::move(cells)) {}
};

// Collects the states a construction needs around itself, writes the non-W
// ones into the configuration, and faults on contradictions. One context is
// shared across all stamps of an assembly so that cells one element needs
// quiet cannot be claimed as milestones by another.
class Stamper {
  public:
    Stamper(const Grid& grid, Configuration& config) : grid_(&grid), config_(&config) {
        for (const auto& [c, s] : config.cells()) required_[c] = s;
    }

    const Grid& grid() const { return *grid_; }
    Configuration& config() { return *config_; }

    // Demands that `cell` hold `s` in the idle configuration.
    void require(Cell cell, State s);
    void require_interior(Cell cell) const;
    bool is_required(Cell cell) const { return required_.count(cell) > 0; }
    std::optional<State> required_state(Cell cell) const {
        auto it = required_.find(cell);
        if (it == required_.end()) return std::nullopt;
        return it->second;
    }

  private:
    const Grid* grid_;
    Configuration* config_;
    std::unordered_map<Cell, State> required_;
};

struct TrackElement {
    ElementKind kind = ElementKind::standard;
    Cell cell = kExterior;      // the cell the locomotive crosses
    int entry_dir = 0;          // neighbour index of the previous track cell
    int exit_dir = 0;           // neighbour index of the next track cell
    Cell entry_cell = kExterior;
    Cell exit_cell = kExterior;
    std::vector<Cell> milestones;
};

// Neighbour index of side `side` (1..7) for an element of kind `kind`
// entered from neighbour index `entry_dir`.
int side_dir(ElementKind kind, int entry_dir, int side);

// Stamp one element: writes the milestones, checks the footprint is interior
// and free, and leaves the track cells quiescent.
TrackElement stamp_element(Stamper& st, ElementKind kind, Cell cell, int entry_dir);

// Convenience wrapper matching the one-shot contract: a fresh context per call.
TrackElement stamp_element(const Grid& grid, ElementKind kind, Cell cell, int entry_dir,
                           Configuration& config);

struct TrackPath {
    std::vector<TrackElement> elements;
    std::vector<Cell> cells;  // cells.front() is the entry, cells.back() the exit

    Cell entry() const { return cells.front(); }
    Cell exit() const { return cells.back(); }
};

// Walking state for laying consecutive elements: the cell the next element
// will occupy and the direction its predecessor is seen under.
struct TrackHead {
    Cell cell;
    int entry_dir;
};

// Head after appending an element of `kind` at `head`.
TrackHead next_head(const Grid& grid, const TrackHead& head, ElementKind kind);

// Append a run of elements at `head`, returning the new head.
TrackHead lay_elements(Stamper& st, TrackHead head, const std::vector<ElementKind>& kinds,
                       TrackPath& path);

// Number of standard elements wound around each pivot between turns of a
// vertical (about half of a pivot's sides).
inline constexpr int kVerticalFan = 3;
// Standard elements between junctions of a horizontal (the sons of a node
// that carry plain track).
inline constexpr int kHorizontalFan = 1;

// A track along a branch: standard elements winding around pivots linked by
// turns. `length` counts track cells.
TrackPath build_vertical(const Grid& grid, Cell start, int entry_dir, int length,
                         Configuration& config);
TrackPath build_vertical(Stamper& st, Cell start, int entry_dir, int length);

// A track along a level: standard elements linked by junctions at node
// transitions. `span` counts junction hops; the path carries
// span*(kHorizontalFan+1)+kHorizontalFan cells.
TrackPath build_horizontal(const Grid& grid, Cell start, int entry_dir, int span,
                           Configuration& config);
TrackPath build_horizontal(Stamper& st, Cell start, int entry_dir, int span);

// Places a locomotive (one red cell) or a double locomotive (two contiguous
// red cells) at the start of an idle path.
void inject_locomotive(Configuration& config, const TrackPath& path, int count);

}  // namespace heptaca
