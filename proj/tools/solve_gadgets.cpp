// Footprint reconstruction: completes gadget cores into stable, behaving
// patches by counterexample-guided search. A candidate runs under the rule
// table; every missing-rule or instability witness spawns repairs near the
// witness cell. Accepted layouts get frozen into gadget_layouts.cpp.
#include <cstdio>
#include <cstring>
#include <map>
#include <queue>
#include <set>

#include "heptaca/structures.hpp"

using namespace heptaca;

static RuleTable T = RuleTable::load_file(HEPTACA_DATA_DIR "/rules_heptagrid_3states.txt");

namespace {

struct Outcome {
    enum Kind { success, witness, dead } kind = dead;
    Cell cell = kExterior;  // witness cell for repairs
    int progress = 0;
};

using Oracle = std::function<Outcome(const Configuration& idle)>;

struct Candidate {
    std::map<Cell, State> overrides;
    int progress = 0;
};

Configuration apply_overrides(const Configuration& seed, const std::map<Cell, State>& overrides) {
    Configuration c = seed;
    for (auto& [cell, s] : overrides) c.set(cell, s);
    return c;
}

// Idle stability first, then the behaviour oracle.
Outcome evaluate(const Grid& g, const Configuration& seed, const Candidate& cand,
                 const Oracle& oracle) {
    Configuration idle = apply_overrides(seed, cand.overrides);
    try {
        StepResult r = step(idle, T, g);
        if (!r.delta.empty()) return {Outcome::witness, r.delta.front().cell, 0};
    } catch (const MissingRuleError& e) {
        return {Outcome::witness, g.cell(e.cell), 0};
    } catch (const RadiusExhaustedError&) {
        return {Outcome::dead, kExterior, 0};
    }
    return oracle(idle);
}

std::optional<Configuration> auto_complete(const Grid& g, const Configuration& seed,
                                           const std::set<Cell>& frozen, const Oracle& oracle,
                                           int rounds = 16, std::size_t beam_width = 700,
                                           bool verbose = false) {
    auto key_of = [](const Candidate& c) {
        std::string k;
        for (auto& [cell, s] : c.overrides) {
            k += std::to_string(cell);
            k += char('0' + int(s));
            k += ',';
        }
        return k;
    };
    std::set<std::string> seen;
    std::vector<Candidate> beam{Candidate{}};
    seen.insert(key_of(beam[0]));

    for (int round = 0; round < rounds; ++round) {
        std::vector<std::pair<Outcome, Candidate>> scored;
        for (auto& cand : beam) {
            Configuration idle = apply_overrides(seed, cand.overrides);
            Outcome out;
            // idle stability
            bool idle_ok = true;
            try {
                StepResult r = step(idle, T, g);
                if (!r.delta.empty()) {
                    out = {Outcome::witness, r.delta.front().cell, -1};
                    idle_ok = false;
                }
            } catch (const MissingRuleError& e) {
                out = {Outcome::witness, g.cell(e.cell), -1};
                idle_ok = false;
            } catch (const RadiusExhaustedError&) {
                out = {Outcome::dead, kExterior, 0};
                idle_ok = false;
            }
            if (idle_ok) out = oracle(idle);
            if (out.kind == Outcome::success) return idle;
            scored.emplace_back(out, cand);
        }
        // Expand witnesses, best progress first, small footprints preferred.
        std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            if (a.first.progress != b.first.progress) return a.first.progress > b.first.progress;
            return a.second.overrides.size() < b.second.overrides.size();
        });
        std::vector<Candidate> next;
        for (auto& [out, cand] : scored) {
            if (out.kind != Outcome::witness || out.cell == kExterior) continue;
            std::vector<Cell> sites{out.cell};
            for (int i = 0; i < 7; ++i) {
                Cell n = g.neighbour(out.cell, i);
                if (n != kExterior) sites.push_back(n);
            }
            for (Cell site : sites) {
                if (frozen.count(site) || !g.is_interior(site)) continue;
                State cur = apply_overrides(seed, cand.overrides).get(site);
                for (State s : {State::W, State::B, State::R}) {
                    if (s == cur) continue;
                    Candidate c2 = cand;
                    c2.progress = out.progress;
                    c2.overrides[site] = s;
                    std::string k = key_of(c2);
                    if (seen.count(k)) continue;
                    seen.insert(k);
                    next.push_back(std::move(c2));
                    if (next.size() >= beam_width * 3) break;
                }
                if (next.size() >= beam_width * 3) break;
            }
            if (next.size() >= beam_width * 3) break;
        }
        if (next.empty()) return std::nullopt;
        // Keep the most promising: deepest progress first, small footprints break ties.
        std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) {
            if (a.progress != b.progress) return a.progress > b.progress;
            return a.overrides.size() < b.overrides.size();
        });
        if (next.size() > beam_width) next.resize(beam_width);
        beam = std::move(next);
        if (verbose) printf("  round %d: beam %zu\n", round + 1, beam.size());
    }
    return std::nullopt;
}

int count_red(const Configuration& c) {
    int r = 0;
    for (const auto& [cell, s] : c.cells())
        if (s == State::R) ++r;
    return r;
}

// --------------------------------------------------------------------------
// Track attachment helpers
// --------------------------------------------------------------------------
TrackHead back_up(const Grid& g, TrackHead head, int n) {
    for (int i = 0; i < n; ++i) {
        Cell prev = g.neighbour(head.cell, head.entry_dir);
        if (prev == kExterior) throw PlacementError("runs off grid");
        head = TrackHead{prev, Grid::mod7(g.alignment(head.cell, head.entry_dir) - 5)};
    }
    return head;
}

struct Setup {
    Configuration seed;
    std::set<Cell> frozen;
    TrackPath in, out;
};

// --------------------------------------------------------------------------
// Doubler
// --------------------------------------------------------------------------
void solve_doubler() {
    Grid g = Grid::build(9);
    Cell centre = g.cell(4, 20);
    auto ring = g.neighbours(centre);
    const State Wst = State::W, B = State::B, R = State::R;
    std::vector<std::array<State, 7>> patterns = {
        {R, R, R, Wst, B, B, Wst},
        {Wst, B, B, Wst, R, R, R},
    };
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        auto& pat = patterns[pi];
        std::vector<int> wslots;
        for (int i = 0; i < 7; ++i)
            if (pat[std::size_t(i)] == Wst) wslots.push_back(i);
        for (int in_slot : wslots) for (int out_slot : wslots) {
            if (in_slot == out_slot) continue;
            Cell in_cell = ring[std::size_t(in_slot)], out_cell = ring[std::size_t(out_slot)];
            // The track may hand off into the ring cell itself or into one of
            // its outer neighbours (an unstamped relay cell).
            std::vector<Cell> in_targets{in_cell}, out_targets{out_cell};
            for (int i = 0; i < 7; ++i) {
                Cell n = g.neighbour(in_cell, i);
                bool r1 = (n == centre);
                for (Cell r : ring) r1 |= (n == r);
                if (!r1) in_targets.push_back(n);
                Cell m = g.neighbour(out_cell, i);
                bool r2 = (m == centre);
                for (Cell r : ring) r2 |= (m == r);
                if (!r2) out_targets.push_back(m);
            }
            for (Cell t_in : in_targets) for (Cell t_out : out_targets) {
            for (int xi = 0; xi < 7; ++xi) for (int yi = 0; yi < 7; ++yi) {
                Cell X = g.neighbour(t_in, xi), Y = g.neighbour(t_out, yi);
                bool skip = (X == centre || Y == centre || X == Y || X == kExterior || Y == kExterior ||
                             X == t_out || Y == t_in || X == out_cell || Y == in_cell);
                for (Cell r : ring) skip |= (X == r) || (Y == r);
                if (skip) continue;
                Configuration config;
                Stamper st(g, config);
                TrackPath pin, pout;
                try {
                    for (int i = 0; i < 7; ++i) st.require(ring[std::size_t(i)], pat[std::size_t(i)]);
                    st.require(centre, Wst);
                    TrackHead last{X, Grid::mod7(g.side_towards(X, t_in) - 5)};
                    lay_elements(st, back_up(g, last, 2),
                                 {ElementKind::standard, ElementKind::standard, ElementKind::standard}, pin);
                    lay_elements(st, TrackHead{Y, g.side_towards(Y, t_out)},
                                 {ElementKind::standard, ElementKind::standard, ElementKind::standard,
                                  ElementKind::standard}, pout);
                } catch (const PlacementError&) { continue; }
                std::set<Cell> frozen;
                for (auto& [c, s] : config.cells()) { (void)s; frozen.insert(c); }
                frozen.insert(centre);
                frozen.insert(in_cell);
                frozen.insert(out_cell);
                for (Cell c : pin.cells) frozen.insert(c);
                for (Cell c : pout.cells) frozen.insert(c);

                auto outc = pout.cells;
                Cell start = pin.cells[0];
                Oracle oracle = [&, outc, start, centre, in_cell, out_cell](const Configuration& idle) -> Outcome {
                    Configuration c = idle;
                    c.set(start, R);
                    for (int t = 0; t < 28; ++t) {
                        try {
                            StepResult r = step(c, T, g);
                            c = std::move(r.config);
                        } catch (const MissingRuleError& e) {
                            return {Outcome::witness, g.cell(e.cell), t};
                        } catch (const RadiusExhaustedError&) {
                            return {Outcome::dead, kExterior, t};
                        }
                        int reds = count_red(c);
                        if (reds > 2) return {Outcome::dead, kExterior, t};
                        if (c.get(outc[3]) == R && c.get(outc[2]) == R && reds == 2 &&
                            c.get(centre) == idle.get(centre) && c.get(in_cell) == idle.get(in_cell) &&
                            c.get(out_cell) == idle.get(out_cell))
                            return {Outcome::success, kExterior, 100 + t};
                        if (reds == 0) return {Outcome::dead, kExterior, t};
                    }
                    return {Outcome::dead, kExterior, 28};
                };
                auto sol = auto_complete(g, config, frozen, oracle);
                if (sol) {
                    printf("DOUBLER pattern=%zu in_slot=%d out_slot=%d xi=%d yi=%d\n", pi, in_slot,
                           out_slot, xi, yi);
                    printf("  overrides vs plain stamp:\n");
                    for (auto& [c, s] : sol->sorted_cells())
                        if (config.get(c) != s) printf("    %s -> %c\n", to_string(g.id_of(c)).c_str(), to_char(s));
                    // express footprint relative to (centre, ref_dir = in-cell slot)
                    int ref = g.side_towards(centre, in_cell);
                    printf("  relpaths from centre (ref=in-cell dir %d):\n", ref);
                    for (auto& [c, s] : sol->sorted_cells()) {
                        RelPath rp = relative_path(g, centre, ref, c);
                        printf("    {{");
                        for (std::size_t i = 0; i < rp.offsets.size(); ++i)
                            printf("%s%d", i ? "," : "", rp.offsets[i]);
                        printf("}}, State::%c\n", to_char(s));
                    }
                    return;
                }
            }
            }
        }
    }
    printf("doubler: no solution\n");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && !std::strcmp(argv[1], "doubler")) solve_doubler();
    return 0;
}
