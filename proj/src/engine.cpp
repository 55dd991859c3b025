#include "heptaca/engine.hpp"

#include <algorithm>
#include <sstream>

namespace heptaca {

std::vector<std::pair<Cell, State>> Configuration::sorted_cells() const {
    std::vector<std::pair<Cell, State>> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end());
    return out;
}

MissingRuleError::MissingRuleError(CellId cell_, State cur, Neighbourhood n, std::uint64_t gen)
    : std::runtime_error("no rule for cell " + heptaca::to_string(cell_) + " state " +
                         std::string(1, to_char(cur)) + " neighbourhood " + heptaca::to_string(n) +
                         " at generation " + std::to_string(gen)),
      cell(cell_), current(cur), nbhd(n), generation(gen) {}

RadiusExhaustedError::RadiusExhaustedError(CellId cell_, std::uint64_t gen)
    : std::runtime_error("radius exhausted: non-quiescent state at boundary cell " +
                         heptaca::to_string(cell_) + " at generation " + std::to_string(gen)),
      cell(cell_), generation(gen) {}

StepResult step(const Configuration& config, const RuleTable& table, const Grid& grid) {
    // Active set: non-W cells plus their neighbourhoods. Everything else has
    // an all-W neighbourhood and stays W by the quiescent rule.
    std::vector<Cell> active;
    active.reserve(config.population() * 8);
    for (const auto& [c, s] : config.cells()) {
        (void)s;
        active.push_back(c);
        for (int i = 0; i < 7; ++i) {
            Cell n = grid.neighbour(c, i);
            if (n != kExterior) active.push_back(n);
        }
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());

    StepResult out;
    out.config = config;
    out.config.generation = config.generation + 1;
    for (Cell c : active) {
        State cur = config.get(c);
        Neighbourhood nbhd;
        for (int i = 0; i < 7; ++i) {
            Cell n = grid.neighbour(c, i);
            nbhd[std::size_t(i)] = (n == kExterior) ? State::W : config.get(n);
        }
        auto res = table.lookup(cur, nbhd);
        if (!res) throw MissingRuleError(grid.id_of(c), cur, nbhd, config.generation);
        if (res->next != State::W && grid.is_boundary(c))
            throw RadiusExhaustedError(grid.id_of(c), config.generation);
        if (res->next != cur) {
            out.config.set(c, res->next);
            out.delta.push_back(CellDelta{c, cur, res->next, res->rule_id});
        }
    }
    return out;
}

bool is_fixed_point(const Configuration& config, const RuleTable& table, const Grid& grid) {
    return step(config, table, grid).delta.empty();
}

Trace run(const Configuration& config, const RuleTable& table, const Grid& grid,
          std::uint64_t max_steps, const StopPredicate& stop) {
    Trace trace;
    Configuration cur = config;
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        StepResult r = step(cur, table, grid);
        trace.steps.push_back(std::move(r.delta));
        cur = std::move(r.config);
        if (stop && stop(cur)) {
            trace.stopped_early = true;
            break;
        }
    }
    trace.final_config = std::move(cur);
    return trace;
}

std::string export_trace(const Trace& trace, const Grid& grid, std::uint64_t first_gen) {
    std::ostringstream os;
    std::uint64_t gen = first_gen;
    for (const auto& step_delta : trace.steps) {
        for (const CellDelta& d : step_delta) {
            CellId id = grid.id_of(d.cell);
            os << gen << " " << id.ring << " " << id.pos << " " << to_char(d.before) << " "
               << to_char(d.after) << " " << d.rule_id << "\n";
        }
        ++gen;
    }
    return os.str();
}

std::string export_snapshot(const Configuration& config, const Grid& grid) {
    std::ostringstream os;
    for (const auto& [c, s] : config.sorted_cells()) {
        CellId id = grid.id_of(c);
        os << id.ring << " " << id.pos << " " << to_char(s) << "\n";
    }
    return os.str();
}

}  // namespace heptaca
