#include <doctest.h>

#include <cmath>

#include "heptaca/geometry.hpp"

using namespace heptaca;

TEST_CASE("centre maps to the origin and all cells stay inside the disk") {
    Grid g = Grid::build(4);
    DiskLayout layout(g);
    auto [x0, y0] = disk_coordinates(layout, 0);
    CHECK(std::abs(x0) < 1e-12);
    CHECK(std::abs(y0) < 1e-12);
    for (Cell c = 0; c < g.size(); ++c) {
        auto z = layout.centre(c);
        CHECK(std::norm(z) < 1.0);
    }
}

TEST_CASE("distinct cells are separated by the documented minimum") {
    Grid g = Grid::build(3);
    DiskLayout layout(g);
    for (Cell a = 0; a < g.size(); ++a)
        for (Cell b = a + 1; b < g.size(); ++b)
            CHECK(std::abs(layout.centre(a) - layout.centre(b)) > DiskLayout::kMinSeparation);
}

TEST_CASE("nearest-point pairs are exactly the adjacency pairs at radius 3") {
    // Adjacent centres sit at hyperbolic distance 2*rho; anything else is
    // farther. In the disk, compare via the hyperbolic metric.
    Grid g = Grid::build(3);
    DiskLayout layout(g);
    auto hyper_dist = [](std::complex<double> a, std::complex<double> b) {
        double num = std::norm(a - b);
        double den = (1 - std::norm(a)) * (1 - std::norm(b));
        return std::acosh(1 + 2 * num / den);
    };
    const double d_adj = DiskLayout::neighbour_distance();
    for (Cell a = 0; a < g.size(); ++a) {
        for (Cell b = a + 1; b < g.size(); ++b) {
            double d = hyper_dist(layout.centre(a), layout.centre(b));
            bool adjacent = g.side_towards(a, b) >= 0;
            if (adjacent)
                CHECK(d == doctest::Approx(d_adj).epsilon(1e-6));
            else
                CHECK(d > d_adj * 1.5);
        }
    }
}

TEST_CASE("adjacent cells agree on their shared corners") {
    // The corner a cell computes between slots i,i+1 must coincide with a
    // corner of the neighbour across slot i.
    Grid g = Grid::build(2);
    DiskLayout layout(g);
    for (Cell c = 0; c < g.size(); ++c) {
        if (!g.is_interior(c)) continue;
        auto corners = layout.corners(c);
        for (int i = 0; i < 7; ++i) {
            Cell n = g.neighbour(c, i);
            if (n == kExterior) continue;
            auto ncorners = layout.corners(n);
            double best = 1e9;
            for (const auto& p : ncorners) best = std::min(best, std::abs(p - corners[std::size_t(i)]));
            CHECK(best < 1e-9);
        }
    }
}
