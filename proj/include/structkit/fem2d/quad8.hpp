#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace structkit::fem2d {

using Quad8Coords = Eigen::Matrix<double, 8, 2>;
using Quad8Values = Eigen::Matrix<double, 8, 1>;

/// Equivalent nodal forces for a constant traction (force per length) on
/// edge `face` (0: nodes 0-4-1, 1: 1-5-2, 2: 2-6-3, 3: 3-7-0), integrated
/// with `num_gauss` ∈ {1, 2, 3} points along the edge. Layout is
/// [Fx0, Fy0, Fx1, Fy1, ...]; entries off the loaded edge are zero.
Eigen::Matrix<double, 16, 1> quad8_edge_distributed_load(int face, const Quad8Coords& node_coords,
                                                         const Eigen::Vector2d& traction,
                                                         int num_gauss);

/// Physical gradient of the interpolated field at each reference point.
/// Throws DegenerateGeometry when |det J| <= 1e-12 * (bounding-box area).
std::vector<Eigen::Vector2d> quad8_physical_gradient(const Quad8Coords& node_coords,
                                                     const Quad8Values& node_values,
                                                     std::span<const Eigen::Vector2d> points);

/// ∫_Ω ∇u dΩ by Gauss quadrature with num_gauss ∈ {1, 4, 9}.
Eigen::Vector2d quad8_integral_of_gradient(const Quad8Coords& node_coords,
                                           const Quad8Values& node_values, int num_gauss);

} // namespace structkit::fem2d
