#pragma once

#include <string_view>

#include <Eigen/Dense>

namespace structkit::fem2d {

enum class ElementFamily { Tri6, Quad8 };

std::string_view family_name(ElementFamily family);

struct Mesh2D {
    Eigen::MatrixX2d coords;
    /// One row per element, node order as in shape.hpp.
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> connectivity;
    ElementFamily kind = ElementFamily::Tri6;

    Eigen::Index num_nodes() const { return coords.rows(); }
    Eigen::Index num_elements() const { return connectivity.rows(); }
};

/// Structured Tri6 mesh: each of the nx*ny cells is split along its
/// (lo,lo)-(hi,hi) diagonal. (2nx+1)(2ny+1) nodes, 2*nx*ny elements.
Mesh2D tri6_mesh_rectangle(double x_lo, double y_lo, double x_hi, double y_hi, int nx, int ny);

/// Structured Quad8 mesh: the refined lattice without cell centres.
/// (2nx+1)(2ny+1) - nx*ny nodes, nx*ny elements.
Mesh2D quad8_mesh_rectangle(double x_lo, double y_lo, double x_hi, double y_hi, int nx, int ny);

} // namespace structkit::fem2d
