#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heptaca/engine.hpp"
#include "heptaca/tracks.hpp"

namespace heptaca {

// ---------------------------------------------------------------------------
// Relative addressing
//
// A cell near an anchor is written as a chain of neighbour hops. The first
// hop leaves the anchor through slot ref_dir + offsets[0]; each later hop
// leaves through back_dir + offset, where back_dir is the side facing the
// cell we just came from. Because the map is consistently oriented, the same
// chain denotes the "same" cell around any (anchor, ref_dir).
// ---------------------------------------------------------------------------
struct RelPath {
    std::vector<int> offsets;
    friend auto operator<=>(const RelPath&, const RelPath&) = default;
};

Cell resolve(const Grid& grid, Cell anchor, int ref_dir, const RelPath& path);
// Shortest hop chain from anchor to target (BFS; deterministic).
RelPath relative_path(const Grid& grid, Cell anchor, int ref_dir, Cell target);

// ---------------------------------------------------------------------------
// Bounded footprint search
// ---------------------------------------------------------------------------
struct SearchOverflowError : std::runtime_error {
    int free_cells;
    SearchOverflowError(std::string msg, int n) : std::runtime_error(std::move(msg)), free_cells(n) {}
};

struct PatchConstraints {
    // Cells whose states are unknown; everything else is read from the base
    // configuration (absent = W).
    std::vector<Cell> free_cells;
    int max_free = 12;
    // Every assignment returned is a fixed point over the stability region
    // (defaults to the free cells, the base's non-W cells, and all their
    // neighbours).
    std::vector<Cell> stability_region;
    // Optional behavioural filter over the completed configuration.
    std::function<bool(const Configuration&)> behaviour;
    // Stop after this many accepted candidates (0 = unbounded).
    std::size_t max_results = 0;
};

// Exhaustive search over W/B/R assignments of the free cells, pruned by
// idle stability, filtered by the behaviour predicate.
std::vector<Configuration> search_stable_patch(const Grid& grid, const RuleTable& table,
                                               const Configuration& base,
                                               const PatchConstraints& constraints);

// ---------------------------------------------------------------------------
// Gadgets
// ---------------------------------------------------------------------------
enum class GadgetKind {
    doubler,         // rhombic pattern: one locomotive in, two contiguous out
    branch_pattern,  // round-about branching: 1 -> exit track, 2 -> 1 on the ring
    fixed_switch,    // passive merge of two one-way tracks
    killer,          // blue passes, red destroys; a signal toggles the colour
    fork,            // one locomotive in, one out on each of two tracks
    memory_passive,  // two-way entry; crossing the non-selected side flips it
};

const char* gadget_name(GadgetKind k);
std::optional<GadgetKind> gadget_from_name(const std::string& name);

// Port handles: track heads where the assembly continues. An `in` head is
// where the final element of an incoming route must sit; `out` heads are
// where the next outgoing element goes.
struct GadgetStamp {
    GadgetKind kind = GadgetKind::doubler;
    Cell centre = kExterior;
    int ref_dir = 0;
    std::string variant;
    std::map<Cell, State> footprint;  // idle states incl. lead elements
    TrackHead in{kExterior, 0};
    TrackHead out{kExterior, 0};
    TrackHead out2{kExterior, 0};       // branch_pattern ring continuation / fork second exit
    TrackHead in2{kExterior, 0};        // fixed_switch second entry / memory other side
    TrackHead signal_in{kExterior, 0};  // killer colour toggle
    TrackHead signal_out{kExterior, 0}; // memory_passive emitted locomotive
    // Kind-specific marker cells (killer colour cell, memory selection cells).
    std::map<std::string, Cell> markers;
};

// Stamp a gadget with its centre at `centre`, oriented by `ref_dir` (the
// anchor slot the frozen layout is rotated into). `variant` selects a
// stamped sub-kind where one exists: killer colour ("blue"/"red"), memory
// selection ("left"/"right").
GadgetStamp stamp_gadget(Stamper& st, GadgetKind kind, Cell centre, int ref_dir,
                         const std::string& variant = "");
GadgetStamp stamp_gadget(const Grid& grid, GadgetKind kind, Cell centre, int ref_dir,
                         Configuration& config, const std::string& variant = "");

}  // namespace heptaca
