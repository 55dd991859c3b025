#pragma once

#include <complex>
#include <vector>

#include "heptaca/grid.hpp"

namespace heptaca {

// Poincaré-disk embedding of a grid, for rendering. The centre cell maps to
// the origin; every cell maps strictly inside the unit disk. Rendering-only:
// no correctness weight beyond the documented separation guarantees.
class DiskLayout {
  public:
    explicit DiskLayout(const Grid& grid);

    std::complex<double> centre(Cell c) const { return centre_[std::size_t(c)]; }
    // The 7 polygon corners of a cell, counter-clockwise.
    std::array<std::complex<double>, 7> corners(Cell c) const;

    // Hyperbolic distance between the centres of two adjacent cells.
    static double neighbour_distance();

    // Minimum Euclidean separation between distinct cell centres, valid for
    // every grid of radius <= 8 (separations shrink roughly like e^-ring).
    static constexpr double kMinSeparation = 1e-4;

  private:
    const Grid* grid_;
    std::vector<std::complex<double>> centre_;
    // Frame of each cell: a Möbius transform of the disk written as
    // z -> (a z + b) / (conj(b) z + conj(a)), encoding position + heading.
    struct Frame {
        std::complex<double> a{1.0, 0.0};
        std::complex<double> b{0.0, 0.0};
        std::complex<double> apply(std::complex<double> z) const {
            return (a * z + b) / (std::conj(b) * z + std::conj(a));
        }
        Frame then(const Frame& o) const {  // this ∘ o
            return Frame{a * o.a + b * std::conj(o.b), a * o.b + b * std::conj(o.a)};
        }
    };
    std::vector<Frame> frame_;
};

// Convenience: disk coordinates of one cell (rebuilds nothing; layout should
// be reused when many cells are needed).
std::pair<double, double> disk_coordinates(const DiskLayout& layout, Cell c);

}  // namespace heptaca
