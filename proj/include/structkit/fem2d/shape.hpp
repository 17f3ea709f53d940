#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace structkit::fem2d {

/// Shape-function values and reference gradients at one point.
/// gradients(a, 0) = ∂N_a/∂ξ, gradients(a, 1) = ∂N_a/∂η.
struct ShapeEval {
    Eigen::VectorXd values;
    Eigen::MatrixX2d gradients;
};

// Node ordering for both families: corners counterclockwise, then midsides
// counterclockwise starting with the edge between corners 1 and 2.
//
//   Tri6 on (0,0),(1,0),(0,1):     Quad8 on [-1,1]^2:
//     2                              3 --- 6 --- 2
//     | \                            |           |
//     5   4                          7           5
//     |     \                        |           |
//     0 - 3 - 1                      0 --- 4 --- 1

/// Reference coordinates of the 6 Tri6 nodes.
const std::vector<Eigen::Vector2d>& tri6_nodes();
/// Reference coordinates of the 8 Quad8 nodes.
const std::vector<Eigen::Vector2d>& quad8_nodes();

/// Quadratic Lagrange basis on barycentric coordinates. Points outside the
/// triangle are evaluated by extrapolation.
ShapeEval tri6_shape(const Eigen::Vector2d& point);
std::vector<ShapeEval> tri6_shape(std::span<const Eigen::Vector2d> points);

/// 8-node serendipity basis.
ShapeEval quad8_shape(const Eigen::Vector2d& point);
std::vector<ShapeEval> quad8_shape(std::span<const Eigen::Vector2d> points);

} // namespace structkit::fem2d
