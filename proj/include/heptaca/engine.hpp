#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "heptaca/grid.hpp"
#include "heptaca/rules.hpp"
#include "heptaca/state.hpp"

namespace heptaca {

// Sparse cell -> state map; W is represented by absence. Evolves
// synchronously under a RuleTable.
class Configuration {
  public:
    State get(Cell c) const {
        auto it = cells_.find(c);
        return it == cells_.end() ? State::W : it->second;
    }
    void set(Cell c, State s) {
        if (s == State::W)
            cells_.erase(c);
        else
            cells_[c] = s;
    }
    std::size_t population() const { return cells_.size(); }
    const std::unordered_map<Cell, State>& cells() const { return cells_; }
    // Non-quiescent cells in increasing cell order, for deterministic output.
    std::vector<std::pair<Cell, State>> sorted_cells() const;

    std::uint64_t generation = 0;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.cells_ == b.cells_;
    }

  private:
    std::unordered_map<Cell, State> cells_;
};

struct CellDelta {
    Cell cell;
    State before;
    State after;
    int rule_id;
};

// No rule matches an evaluated cell. Carries everything needed to diagnose
// a mis-stamped configuration.
struct MissingRuleError : std::runtime_error {
    CellId cell;
    State current;
    Neighbourhood nbhd;
    std::uint64_t generation;
    MissingRuleError(CellId cell_, State cur, Neighbourhood n, std::uint64_t gen);
};

// A non-quiescent state reached the outermost ring, where the neighbourhood
// is truncated; the finite grid can no longer represent the configuration.
struct RadiusExhaustedError : std::runtime_error {
    CellId cell;
    std::uint64_t generation;
    RadiusExhaustedError(CellId cell_, std::uint64_t gen);
};

struct StepResult {
    Configuration config;
    std::vector<CellDelta> delta;  // sorted by cell
};

// One synchronous step. Every non-W cell and every neighbour of one is
// evaluated against the table; cells with an all-W neighbourhood and state W
// provably stay W and are skipped.
StepResult step(const Configuration& config, const RuleTable& table, const Grid& grid);

bool is_fixed_point(const Configuration& config, const RuleTable& table, const Grid& grid);

struct Trace {
    std::vector<std::vector<CellDelta>> steps;
    Configuration final_config;
    bool stopped_early = false;  // stop predicate fired before max_steps
};

using StopPredicate = std::function<bool(const Configuration&)>;

// Iterates `step` until stop(config) or max_steps. The stop predicate is
// checked after each step.
Trace run(const Configuration& config, const RuleTable& table, const Grid& grid,
          std::uint64_t max_steps, const StopPredicate& stop = nullptr);

// Line-delimited trace export: `gen ring pos old new rule_id`.
std::string export_trace(const Trace& trace, const Grid& grid, std::uint64_t first_gen = 1);
// Snapshot export: `ring pos state` lines in increasing cell order.
std::string export_snapshot(const Configuration& config, const Grid& grid);

}  // namespace heptaca
