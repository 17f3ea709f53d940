#pragma once

#include <vector>

#include <Eigen/Dense>

namespace structkit::fem2d {

struct QuadratureRule {
    std::vector<Eigen::Vector2d> points;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

/// Gauss–Legendre abscissae and weights on [-1, 1], 1 to 3 points.
struct GaussRule1D {
    std::vector<double> points;
    std::vector<double> weights;
};

GaussRule1D gauss_legendre_1d(int num_points);

/// Tensor-product Gauss–Legendre rule on [-1, 1]^2; num_points ∈ {1, 4, 9}.
QuadratureRule quad_quadrature(int num_points);

/// Symmetric rules on the triangle (0,0), (1,0), (0,1); num_points ∈ {1, 3, 4}
/// with total-degree exactness 1, 2, 3.
QuadratureRule tri_quadrature(int num_points);

} // namespace structkit::fem2d
