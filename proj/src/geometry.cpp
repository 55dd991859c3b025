#include "heptaca/geometry.hpp"

#include <cmath>
#include <numbers>

namespace heptaca {

namespace {

constexpr double kPi = std::numbers::pi;

// Heptagon metrics for {7,3}: inradius rho satisfies
// cosh(rho) = cos(pi/3) / sin(pi/7); adjacent centres sit 2*rho apart.
double inradius() { return std::acosh(std::cos(kPi / 3) / std::sin(kPi / 7)); }
double circumradius() { return std::acosh(1.0 / (std::tan(kPi / 7) * std::tan(kPi / 3))); }

}  // namespace

double DiskLayout::neighbour_distance() { return 2 * inradius(); }

DiskLayout::DiskLayout(const Grid& grid) : grid_(&grid) {
    const double d = neighbour_distance();
    const double s = std::tanh(d / 2);  // Euclidean offset of a neighbour of the origin

    // Direction k of a frame points at angle 2*pi*k/7; slot directions are
    // counter-clockwise like the neighbour lists.
    auto rot = [](double theta) {
        return Frame{std::polar(1.0, theta / 2), {0.0, 0.0}};
    };
    // Translation moving the origin to `s` along the positive real axis.
    const Frame trans{{1.0, 0.0}, {0.0, 0.0}};
    Frame shift = trans;
    shift.b = {s, 0.0};
    double norm = 1.0 / std::sqrt(1 - s * s);
    shift.a *= norm;
    shift.b *= norm;

    auto slot_dir = [&](int k) { return rot(2 * kPi * k / 7); };

    frame_.assign(std::size_t(grid.size()), Frame{});
    centre_.assign(std::size_t(grid.size()), {0.0, 0.0});
    std::vector<bool> placed(std::size_t(grid.size()), false);
    placed[0] = true;
    std::vector<Cell> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Cell c = queue[head];
        const Frame& fc = frame_[std::size_t(c)];
        centre_[std::size_t(c)] = fc.apply({0.0, 0.0});
        for (int i = 0; i < 7; ++i) {
            Cell n = grid.neighbour(c, i);
            if (n == kExterior || placed[std::size_t(n)]) continue;
            int j = grid.alignment(c, i);
            // Neighbour frame: step out through slot i, turn around, and
            // align so that its slot j points back at c.
            Frame fn = fc.then(slot_dir(i)).then(shift).then(rot(kPi)).then(slot_dir(-j));
            frame_[std::size_t(n)] = fn;
            placed[std::size_t(n)] = true;
            queue.push_back(n);
        }
    }
}

std::array<std::complex<double>, 7> DiskLayout::corners(Cell c) const {
    const double rc = circumradius();
    const double e = std::tanh(rc / 2);
    std::array<std::complex<double>, 7> out;
    const Frame& f = frame_[std::size_t(c)];
    for (int k = 0; k < 7; ++k) {
        double theta = 2 * kPi * k / 7 + kPi / 7;  // corners between slot directions
        out[std::size_t(k)] = f.apply(std::polar(e, theta));
    }
    return out;
}

std::pair<double, double> disk_coordinates(const DiskLayout& layout, Cell c) {
    auto z = layout.centre(c);
    return {z.real(), z.imag()};
}

}  // namespace heptaca
