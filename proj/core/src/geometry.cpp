#include "alforge/geometry.hpp"

#include <cmath>
#include <limits>

#include "alforge/errors.hpp"

namespace alforge {

Mat3 Cell::inverse() const {
    const double det = lattice.determinant();
    const double scale = lattice.cwiseAbs().maxCoeff();
    if (std::abs(det) < 1e-12 * std::max(1.0, scale * scale * scale))
        throw GeometryError("singular cell: lattice determinant is (numerically) zero");
    return lattice.inverse();
}

Vec3 Cell::heights() const {
    // h_k = V / |a_i x a_j|, the face-to-face distance along axis k.
    const double vol = std::abs(lattice.determinant());
    Vec3 h;
    for (int k = 0; k < 3; ++k) {
        const Vec3 v1 = lattice.col((k + 1) % 3);
        const Vec3 v2 = lattice.col((k + 2) % 3);
        const double area = v1.cross(v2).norm();
        h[k] = area > 0.0 ? vol / area : 0.0;
    }
    return h;
}

double Cell::volume() const { return std::abs(lattice.determinant()); }

Cell Cell::cubic(double edge, bool periodic_all) {
    Cell c;
    c.lattice = Mat3::Identity() * edge;
    c.periodic = {periodic_all, periodic_all, periodic_all};
    return c;
}

Cell Cell::open_box() {
    Cell c;
    c.periodic = {false, false, false};
    return c;
}

Vec3 minimum_image(const Cell& cell, const Vec3& ri, const Vec3& rj) {
    Vec3 d = rj - ri;
    if (!cell.any_periodic()) return d;

    const Mat3 inv = cell.inverse();
    Vec3 f = inv * d;
    for (int k = 0; k < 3; ++k)
        if (cell.periodic[k]) f[k] -= std::round(f[k]);

    // Rounding in fractional space is not guaranteed shortest for skewed
    // cells; scan the surrounding image shell and keep the strict minimum.
    Vec3 best = cell.lattice * f;
    double best_norm2 = best.squaredNorm();
    const int nx = cell.periodic[0] ? 1 : 0;
    const int ny = cell.periodic[1] ? 1 : 0;
    const int nz = cell.periodic[2] ? 1 : 0;
    for (int ix = -nx; ix <= nx; ++ix)
        for (int iy = -ny; iy <= ny; ++iy)
            for (int iz = -nz; iz <= nz; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                const Vec3 cand = cell.lattice * (f + Vec3(ix, iy, iz));
                const double n2 = cand.squaredNorm();
                if (n2 < best_norm2 - 1e-15 * (1.0 + best_norm2)) {
                    best = cand;
                    best_norm2 = n2;
                }
            }
    return best;
}

Vec3 wrap_position(const Cell& cell, const Vec3& r) {
    if (!cell.any_periodic()) return r;
    const Mat3 inv = cell.inverse();
    Vec3 f = inv * r;
    for (int k = 0; k < 3; ++k)
        if (cell.periodic[k]) f[k] -= std::floor(f[k]);
    return cell.lattice * f;
}

} // namespace alforge
