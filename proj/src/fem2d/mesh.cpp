#include "structkit/fem2d/mesh.hpp"

#include <cmath>
#include <vector>

#include "structkit/errors.hpp"

namespace structkit::fem2d {

namespace {

void check_bounds(double x_lo, double y_lo, double x_hi, double y_hi, int nx, int ny) {
    const bool finite = std::isfinite(x_lo) && std::isfinite(y_lo) && std::isfinite(x_hi) &&
                        std::isfinite(y_hi);
    if (!finite || !(x_hi > x_lo) || !(y_hi > y_lo)) {
        throw Error(ErrorKind::InvalidArgument, "rectangle requires x_lo < x_hi and y_lo < y_hi");
    }
    if (nx < 1 || ny < 1) {
        throw Error(ErrorKind::InvalidArgument, "nx and ny must be at least 1");
    }
}

// Coordinate of refined-lattice line k out of 2n, hitting the endpoint exactly.
double lattice(double lo, double hi, int k, int n) {
    if (k == 2 * n) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(2 * n);
}

} // namespace

std::string_view family_name(ElementFamily family) {
    return family == ElementFamily::Tri6 ? "tri6" : "quad8";
}

Mesh2D tri6_mesh_rectangle(double x_lo, double y_lo, double x_hi, double y_hi, int nx, int ny) {
    check_bounds(x_lo, y_lo, x_hi, y_hi, nx, ny);
    const int npx = 2 * nx + 1;
    const int npy = 2 * ny + 1;

    Mesh2D mesh;
    mesh.kind = ElementFamily::Tri6;
    mesh.coords.resize(npx * npy, 2);
    for (int j = 0; j < npy; ++j) {
        for (int i = 0; i < npx; ++i) {
            mesh.coords(j * npx + i, 0) = lattice(x_lo, x_hi, i, nx);
            mesh.coords(j * npx + i, 1) = lattice(y_lo, y_hi, j, ny);
        }
    }

    auto id = [npx](int i, int j) { return j * npx + i; };
    mesh.connectivity.resize(2 * nx * ny, 6);
    int e = 0;
    for (int cy = 0; cy < ny; ++cy) {
        for (int cx = 0; cx < nx; ++cx) {
            const int i0 = 2 * cx;
            const int j0 = 2 * cy;
            const int bl = id(i0, j0), br = id(i0 + 2, j0);
            const int tr = id(i0 + 2, j0 + 2), tl = id(i0, j0 + 2);
            // lower-right triangle: bl, br, tr
            mesh.connectivity.row(e++) << bl, br, tr, id(i0 + 1, j0), id(i0 + 2, j0 + 1),
                id(i0 + 1, j0 + 1);
            // upper-left triangle: bl, tr, tl
            mesh.connectivity.row(e++) << bl, tr, tl, id(i0 + 1, j0 + 1), id(i0 + 1, j0 + 2),
                id(i0, j0 + 1);
        }
    }
    return mesh;
}

Mesh2D quad8_mesh_rectangle(double x_lo, double y_lo, double x_hi, double y_hi, int nx, int ny) {
    check_bounds(x_lo, y_lo, x_hi, y_hi, nx, ny);
    const int npx = 2 * nx + 1;
    const int npy = 2 * ny + 1;

    // Lattice points with both indices odd are cell centres and get no node.
    std::vector<int> index(static_cast<std::size_t>(npx * npy), -1);
    Mesh2D mesh;
    mesh.kind = ElementFamily::Quad8;
    mesh.coords.resize(npx * npy - nx * ny, 2);
    int next = 0;
    for (int j = 0; j < npy; ++j) {
        for (int i = 0; i < npx; ++i) {
            if (i % 2 == 1 && j % 2 == 1) continue;
            index[static_cast<std::size_t>(j * npx + i)] = next;
            mesh.coords(next, 0) = lattice(x_lo, x_hi, i, nx);
            mesh.coords(next, 1) = lattice(y_lo, y_hi, j, ny);
            ++next;
        }
    }

    auto id = [&](int i, int j) { return index[static_cast<std::size_t>(j * npx + i)]; };
    mesh.connectivity.resize(nx * ny, 8);
    int e = 0;
    for (int cy = 0; cy < ny; ++cy) {
        for (int cx = 0; cx < nx; ++cx) {
            const int i0 = 2 * cx;
            const int j0 = 2 * cy;
            mesh.connectivity.row(e++) << id(i0, j0), id(i0 + 2, j0), id(i0 + 2, j0 + 2),
                id(i0, j0 + 2), id(i0 + 1, j0), id(i0 + 2, j0 + 1), id(i0 + 1, j0 + 2),
                id(i0, j0 + 1);
        }
    }
    return mesh;
}

} // namespace structkit::fem2d
