#include <doctest.h>

#include <map>
#include <set>

#include "heptaca/grid.hpp"

using namespace heptaca;

TEST_CASE("ring sizes follow the three-term recurrence") {
    CHECK(ring_size(0) == 1);
    CHECK(ring_size(1) == 7);
    CHECK(ring_size(2) == 21);
    CHECK(ring_size(3) == 56);
    CHECK(ring_size(4) == 147);
    CHECK(ring_size(5) == 385);
    CHECK(ring_size(6) == 1008);
}

TEST_CASE("cell counts per radius") {
    CHECK(cell_count(1) == 8);
    CHECK(cell_count(3) == 85);
    CHECK(cell_count(5) == 617);
}

TEST_CASE("build_grid produces the advertised number of cells") {
    CHECK(Grid::build(1).size() == 8);
    CHECK(Grid::build(3).size() == 85);
    CHECK(Grid::build(5).size() == 617);
}

TEST_CASE("oversized radius trips the cell budget") {
    CHECK_THROWS_AS(Grid::build(6, 500), GridResourceError);
    try {
        Grid::build(6, 500);
    } catch (const GridResourceError& e) {
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("centre neighbourhood is ring 1 in order") {
    Grid g = Grid::build(2);
    auto nb = g.neighbours(g.cell(0, 0));
    for (int i = 0; i < 7; ++i) CHECK(g.id_of(nb[std::size_t(i)]) == CellId{1, std::uint32_t(i)});
}

TEST_CASE("adjacency is symmetric with correct side alignment") {
    Grid g = Grid::build(4);
    for (Cell c = 0; c < g.size(); ++c) {
        for (int i = 0; i < 7; ++i) {
            Cell b = g.neighbour(c, i);
            if (b == kExterior) {
                CHECK(g.is_boundary(c));
                continue;
            }
            int j = g.alignment(c, i);
            REQUIRE(j >= 0);
            CHECK(g.neighbour(b, j) == c);
        }
    }
}

TEST_CASE("no duplicate neighbours, and ring-1 cells see the centre once") {
    Grid g = Grid::build(4);
    for (Cell c = 0; c < g.size(); ++c) {
        if (!g.is_interior(c)) continue;
        auto nb = g.neighbours(c);
        std::set<Cell> uniq(nb.begin(), nb.end());
        CHECK(uniq.size() == 7);
    }
    int count = 0;
    for (int i = 0; i < 7; ++i)
        if (g.neighbour(g.cell(1, 0), i) == 0) ++count;
    CHECK(count == 1);
}

TEST_CASE("consecutive neighbours are themselves adjacent (three cells per vertex)") {
    Grid g = Grid::build(4);
    for (Cell c = 0; c < g.size(); ++c) {
        if (!g.is_interior(c)) continue;
        for (int i = 0; i < 7; ++i) {
            Cell a = g.neighbour(c, i);
            Cell b = g.neighbour(c, i + 1);
            if (a == kExterior || b == kExterior) continue;
            CHECK(g.side_towards(a, b) >= 0);
        }
    }
}

TEST_CASE("orientation law: neighbour(b, align+1) == neighbour(a, i-1)") {
    Grid g = Grid::build(4);
    for (Cell a = 0; a < g.size(); ++a) {
        if (!g.is_interior(a)) continue;
        for (int i = 0; i < 7; ++i) {
            Cell b = g.neighbour(a, i);
            if (b == kExterior || g.is_boundary(b)) continue;
            int j = g.alignment(a, i);
            CHECK(g.neighbour(b, j + 1) == g.neighbour(a, i - 1));
        }
    }
}

TEST_CASE("every vertex is shared by exactly 3 cells") {
    // Count triples (c, n_i, n_{i+1}) around interior cells: each interior
    // vertex must be counted exactly 3 times, once per incident cell.
    Grid g = Grid::build(4);
    std::map<std::set<Cell>, int> vertex_count;
    for (Cell c = 0; c < g.size(); ++c) {
        for (int i = 0; i < 7; ++i) {
            Cell a = g.neighbour(c, i);
            Cell b = g.neighbour(c, i + 1);
            if (a == kExterior || b == kExterior) continue;
            vertex_count[{c, a, b}]++;
        }
    }
    for (const auto& [tri, count] : vertex_count) {
        CHECK(tri.size() == 3);
        bool interior_vertex = true;
        for (Cell c : tri)
            if (g.is_boundary(c)) interior_vertex = false;
        if (interior_vertex) CHECK(count == 3);
    }
}

TEST_CASE("two independent builds are identical") {
    Grid a = Grid::build(4);
    Grid b = Grid::build(4);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("boundary cells reject the full-neighbourhood query") {
    Grid g = Grid::build(2);
    CHECK_THROWS_AS((void)g.neighbours(g.cell(2, 0)), GridError);
}
