#ifndef ALFORGE_GEOMETRY_HPP
#define ALFORGE_GEOMETRY_HPP

#include <Eigen/Dense>
#include <array>

namespace alforge {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Simulation cell. Columns of `lattice` are the lattice vectors a, b, c (A).
struct Cell {
    Mat3 lattice = Mat3::Identity();
    std::array<bool, 3> periodic{false, false, false};

    bool any_periodic() const { return periodic[0] || periodic[1] || periodic[2]; }
    bool fully_periodic() const { return periodic[0] && periodic[1] && periodic[2]; }

    // Inverse of the lattice matrix; throws GeometryError when the cell is
    // singular but a periodic axis needs it.
    Mat3 inverse() const;

    // Perpendicular distance between opposite cell faces, per axis.
    Vec3 heights() const;

    double volume() const;

    static Cell cubic(double edge, bool periodic_all = true);
    static Cell open_box();
};

// Shortest periodic image of (rj - ri); raw difference on non-periodic axes.
Vec3 minimum_image(const Cell& cell, const Vec3& ri, const Vec3& rj);

// Wrap a point into the primary cell on periodic axes only.
Vec3 wrap_position(const Cell& cell, const Vec3& r);

} // namespace alforge

#endif
