#include <doctest.h>

#include <set>

#include "heptaca/engine.hpp"
#include "heptaca/tracks.hpp"

using namespace heptaca;

namespace {

const RuleTable& shipped() {
    static RuleTable t = RuleTable::load_file(HEPTACA_DATA_DIR "/rules_heptagrid_3states.txt");
    return t;
}

const Grid& grid9() {
    static Grid g = Grid::build(9);
    return g;
}

int count_red(const Configuration& c) {
    int r = 0;
    for (const auto& [cell, s] : c.cells())
        if (s == State::R) ++r;
    return r;
}

// Runs a transit and checks conservation plus restoration behind the
// locomotive. Returns the number of steps to reach the last path cell.
std::size_t check_transit(const Grid& g, const Configuration& idle, const TrackPath& path, int count) {
    Configuration cur = idle;
    inject_locomotive(cur, path, count);
    Cell goal = path.cells.back();
    std::size_t steps = 0;
    std::set<Cell> path_cells(path.cells.begin(), path.cells.end());
    while (cur.get(goal) != State::R) {
        StepResult r = step(cur, shipped(), g);
        cur = std::move(r.config);
        ++steps;
        REQUIRE(steps < 500);
        // Transit conservation: the locomotive keeps its size.
        CHECK(count_red(cur) == count);
        // Locomotive cells sit on the path; milestones stay blue throughout.
        for (const auto& [cell, s] : cur.cells())
            if (s == State::R) CHECK(path_cells.count(cell) == 1);
        for (const auto& el : path.elements)
            for (Cell m : el.milestones) CHECK(cur.get(m) == State::B);
    }
    // Everything behind the locomotive is restored to the idle stamp.
    for (std::size_t k = 0; k + std::size_t(count) < path.cells.size(); ++k)
        CHECK(cur.get(path.cells[k]) == idle.get(path.cells[k]));
    return steps;
}

}  // namespace

TEST_CASE("element frames: entry and exit sides") {
    // The standard runs 2 -> 7, the turn the reverse 7 -> 2, the junction 5 -> 2.
    CHECK(side_dir(ElementKind::standard, 3, 2) == 3);
    CHECK(side_dir(ElementKind::standard, 3, 7) == Grid::mod7(3 + 5));
    CHECK(side_dir(ElementKind::turn, 3, 7) == 3);
    CHECK(side_dir(ElementKind::turn, 3, 2) == Grid::mod7(3 + 2));
    CHECK(side_dir(ElementKind::junction, 3, 5) == 3);
    CHECK(side_dir(ElementKind::junction, 3, 2) == Grid::mod7(3 + 4));
}

TEST_CASE("lone elements are fixed points with the documented milestone counts") {
    const Grid& g = grid9();
    Configuration c;
    TrackElement el = stamp_element(g, ElementKind::standard, g.cell(3, 5), 2, c);
    CHECK(el.milestones.size() == 3);
    CHECK(is_fixed_point(c, shipped(), g));
    Configuration c2;
    TrackElement turn = stamp_element(g, ElementKind::turn, g.cell(3, 5), 2, c2);
    CHECK(turn.milestones.size() == 4);
    CHECK(is_fixed_point(c2, shipped(), g));
    Configuration c3;
    TrackElement jn = stamp_element(g, ElementKind::junction, g.cell(3, 5), 2, c3);
    CHECK(jn.milestones.size() == 5);
    CHECK(is_fixed_point(c3, shipped(), g));
}

TEST_CASE("consecutive standard elements share their pivot") {
    const Grid& g = grid9();
    Configuration c;
    Stamper st(g, c);
    TrackPath path;
    lay_elements(st, TrackHead{g.cell(3, 0), 0},
                 {ElementKind::standard, ElementKind::standard, ElementKind::standard}, path);
    CHECK(path.elements[0].milestones[0] == path.elements[1].milestones[0]);
    CHECK(path.elements[1].milestones[0] == path.elements[2].milestones[0]);
}

TEST_CASE("vertical transit: single and double locomotive") {
    const Grid& g = grid9();
    Configuration idle;
    TrackPath path = build_vertical(g, g.cell(3, 0), 0, 12, idle);
    REQUIRE(path.cells.size() == 12);
    CHECK(is_fixed_point(idle, shipped(), g));

    // Golden transit times from the first verified runs: the locomotive
    // advances one cell per step.
    CHECK(check_transit(g, idle, path, 1) == 11);
    CHECK(check_transit(g, idle, path, 2) == 10);
}

TEST_CASE("horizontal transit: single and double locomotive") {
    const Grid& g = grid9();
    Configuration idle;
    TrackPath path = build_horizontal(g, g.cell(3, 0), 0, 2, idle);
    CHECK(is_fixed_point(idle, shipped(), g));
    CHECK(path.cells.size() == 2 * std::size_t(kHorizontalFan + 1) + kHorizontalFan);
    CHECK(check_transit(g, idle, path, 1) == path.cells.size() - 1);
    CHECK(check_transit(g, idle, path, 2) == path.cells.size() - 2);
}

TEST_CASE("injection requires an idle path and a sane count") {
    const Grid& g = grid9();
    Configuration idle;
    TrackPath path = build_vertical(g, g.cell(3, 0), 0, 6, idle);
    Configuration c = idle;
    inject_locomotive(c, path, 1);
    CHECK(count_red(c) == 1);
    CHECK_THROWS_AS(inject_locomotive(c, path, 1), PlacementError);
    Configuration c2 = idle;
    inject_locomotive(c2, path, 2);
    CHECK(count_red(c2) == 2);
    CHECK(c2.get(path.cells[0]) == State::R);
    CHECK(c2.get(path.cells[1]) == State::R);
    CHECK_THROWS_AS(inject_locomotive(c2, path, 3), std::invalid_argument);
}

TEST_CASE("overlapping stamps are placement errors") {
    const Grid& g = grid9();
    Configuration c;
    (void)build_vertical(g, g.cell(3, 0), 0, 8, c);
    CHECK_THROWS_AS((void)build_vertical(g, g.cell(3, 1), 1, 8, c), PlacementError);
}

TEST_CASE("footprints touching the boundary ring are radius errors") {
    Grid g = Grid::build(2);
    Configuration c;
    CHECK_THROWS_AS((void)stamp_element(g, ElementKind::standard, g.cell(1, 0), 0, c),
                    PlacementError);
}

TEST_CASE("a corrupted milestone surfaces as a missing-rule diagnostic") {
    const Grid& g = grid9();
    Configuration idle;
    TrackPath path = build_vertical(g, g.cell(3, 0), 0, 8, idle);
    Configuration cur = idle;
    inject_locomotive(cur, path, 1);
    cur.set(path.elements[2].milestones[1], State::R);
    bool missing = false;
    try {
        for (int i = 0; i < 20; ++i) {
            StepResult r = step(cur, shipped(), g);
            cur = std::move(r.config);
        }
    } catch (const MissingRuleError& e) {
        missing = true;
        CHECK(to_string(e.nbhd).size() == 7);
        CHECK(std::string(e.what()).find("no rule for cell") != std::string::npos);
    }
    CHECK(missing);
}
