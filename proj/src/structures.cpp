#include "heptaca/structures.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace heptaca {

Cell resolve(const Grid& grid, Cell anchor, int ref_dir, const RelPath& path) {
    Cell cur = anchor;
    int heading = Grid::mod7(ref_dir);
    bool first = true;
    for (int off : path.offsets) {
        int dir = Grid::mod7(heading + off);
        Cell next = grid.neighbour(cur, dir);
        if (next == kExterior) throw GridError("relative path leaves the grid");
        heading = Grid::mod7(grid.alignment(cur, dir));  // side of `next` facing `cur`
        cur = next;
        first = false;
    }
    (void)first;
    return cur;
}

RelPath relative_path(const Grid& grid, Cell anchor, int ref_dir, Cell target) {
    // BFS over (cell, heading) where heading is the side facing the previous
    // cell (ref_dir at the anchor).
    struct Node {
        Cell cell;
        int heading;
    };
    std::map<std::pair<Cell, int>, std::pair<std::pair<Cell, int>, int>> prev;
    std::deque<Node> queue;
    Node start{anchor, Grid::mod7(ref_dir)};
    prev[{start.cell, start.heading}] = {{kExterior, 0}, -1};
    queue.push_back(start);
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        if (n.cell == target) {
            std::vector<int> offsets;
            std::pair<Cell, int> key{n.cell, n.heading};
            while (true) {
                auto& [pk, off] = prev[key];
                if (off < 0) break;
                offsets.push_back(off);
                key = pk;
            }
            std::reverse(offsets.begin(), offsets.end());
            return RelPath{offsets};
        }
        for (int off = 0; off < 7; ++off) {
            int dir = Grid::mod7(n.heading + off);
            Cell next = grid.neighbour(n.cell, dir);
            if (next == kExterior) continue;
            int nh = grid.alignment(n.cell, dir);
            if (prev.count({next, nh})) continue;
            prev[{next, nh}] = {{n.cell, n.heading}, off};
            queue.push_back({next, nh});
        }
    }
    throw GridError("no relative path to target");
}

// ---------------------------------------------------------------------------
// search_stable_patch
// ---------------------------------------------------------------------------
std::vector<Configuration> search_stable_patch(const Grid& grid, const RuleTable& table,
                                               const Configuration& base,
                                               const PatchConstraints& constraints) {
    const auto& free_cells = constraints.free_cells;
    if (int(free_cells.size()) > constraints.max_free)
        throw SearchOverflowError("search space too large: " + std::to_string(free_cells.size()) +
                                      " free cells exceed the bound of " +
                                      std::to_string(constraints.max_free),
                                  int(free_cells.size()));

    std::map<Cell, int> free_index;
    for (std::size_t i = 0; i < free_cells.size(); ++i) free_index[free_cells[i]] = int(i);

    // Stability region: defaults to everything the assignment can influence.
    std::vector<Cell> region = constraints.stability_region;
    if (region.empty()) {
        std::set<Cell> r;
        auto add_with_nbrs = [&](Cell c) {
            r.insert(c);
            for (int i = 0; i < 7; ++i) {
                Cell n = grid.neighbour(c, i);
                if (n != kExterior) r.insert(n);
            }
        };
        for (Cell c : free_cells) add_with_nbrs(c);
        for (const auto& [c, s] : base.cells()) {
            (void)s;
            add_with_nbrs(c);
        }
        region.assign(r.begin(), r.end());
    }

    // A region cell can be checked once the last free cell among itself and
    // its neighbours is assigned.
    std::vector<std::vector<Cell>> checks_after(free_cells.size() + 1);
    for (Cell x : region) {
        int last = -1;
        auto touch = [&](Cell c) {
            auto it = free_index.find(c);
            if (it != free_index.end()) last = std::max(last, it->second);
        };
        touch(x);
        for (int i = 0; i < 7; ++i) {
            Cell n = grid.neighbour(x, i);
            if (n != kExterior) touch(n);
        }
        checks_after[std::size_t(last + 1)].push_back(x);
    }

    std::vector<State> assignment(free_cells.size(), State::W);
    std::vector<Configuration> results;

    auto state_of = [&](Cell c, int assigned_upto) -> State {
        auto it = free_index.find(c);
        if (it != free_index.end()) {
            return it->second < assigned_upto ? assignment[std::size_t(it->second)] : State::W;
        }
        return base.get(c);
    };
    auto stable = [&](Cell x, int assigned_upto) {
        State s = state_of(x, assigned_upto);
        if (s != State::W && grid.is_boundary(x)) return false;
        Neighbourhood nbhd;
        for (int i = 0; i < 7; ++i) {
            Cell n = grid.neighbour(x, i);
            nbhd[std::size_t(i)] = (n == kExterior) ? State::W : state_of(n, assigned_upto);
        }
        auto res = table.lookup(s, nbhd);
        return res.has_value() && res->next == s;
    };

    // Depth-first over assignments with stability pruning.
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        for (Cell x : checks_after[depth])
            if (!stable(x, int(depth))) return true;  // prune, keep searching siblings
        if (depth == free_cells.size()) {
            Configuration candidate = base;
            for (std::size_t i = 0; i < free_cells.size(); ++i) candidate.set(free_cells[i], assignment[i]);
            if (!constraints.behaviour || constraints.behaviour(candidate)) {
                results.push_back(std::move(candidate));
                if (constraints.max_results && results.size() >= constraints.max_results) return false;
            }
            return true;
        }
        for (State s : {State::W, State::B, State::R}) {
            assignment[depth] = s;
            if (!dfs(depth + 1)) return false;
        }
        return true;
    };
    dfs(0);
    return results;
}

// ---------------------------------------------------------------------------
// Gadget stamping (frozen layouts are registered in gadget_layouts.cpp)
// ---------------------------------------------------------------------------
const char* gadget_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::doubler: return "doubler";
        case GadgetKind::branch_pattern: return "branch_pattern";
        case GadgetKind::fixed_switch: return "fixed_switch";
        case GadgetKind::killer: return "killer";
        case GadgetKind::fork: return "fork";
        case GadgetKind::memory_passive: return "memory_passive";
    }
    return "?";
}

std::optional<GadgetKind> gadget_from_name(const std::string& name) {
    for (GadgetKind k : {GadgetKind::doubler, GadgetKind::branch_pattern, GadgetKind::fixed_switch,
                         GadgetKind::killer, GadgetKind::fork, GadgetKind::memory_passive})
        if (name == gadget_name(k)) return k;
    return std::nullopt;
}

GadgetStamp stamp_gadget(const Grid& grid, GadgetKind kind, Cell centre, int ref_dir,
                         Configuration& config, const std::string& variant) {
    Stamper st(grid, config);
    return stamp_gadget(st, kind, centre, ref_dir, variant);
}

}  // namespace heptaca
