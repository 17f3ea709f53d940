#include "structkit/fem2d/quad8.hpp"

#include <cmath>
#include <string>

#include "structkit/errors.hpp"
#include "structkit/fem2d/quadrature.hpp"
#include "structkit/fem2d/shape.hpp"

namespace structkit::fem2d {

namespace {

constexpr double kSingularRatio = 1e-12;

double bounding_box_area(const Quad8Coords& x) {
    const Eigen::Vector2d extent = x.colwise().maxCoeff() - x.colwise().minCoeff();
    return extent.x() * extent.y();
}

struct MappedPoint {
    Eigen::Matrix2d jacobian;  // (i, j) = ∂x_j / ∂ξ_i
    double det;
    Eigen::Matrix<double, 8, 2> dN;
};

MappedPoint map_point(const Quad8Coords& x, const Eigen::Vector2d& p, double bbox_area) {
    MappedPoint m;
    m.dN = quad8_shape(p).gradients;
    m.jacobian = m.dN.transpose() * x;
    m.det = m.jacobian.determinant();
    if (!(std::abs(m.det) > kSingularRatio * bbox_area)) {
        throw Error(ErrorKind::DegenerateGeometry,
                    "singular element Jacobian (det J = " + std::to_string(m.det) + ")");
    }
    return m;
}

// Reference gradient (∂u/∂ξ, ∂u/∂η) = J ∇u, so ∇u = J⁻¹ (dN)ᵀ u.
Eigen::Vector2d physical_gradient(const MappedPoint& m, const Quad8Values& u) {
    return m.jacobian.partialPivLu().solve(m.dN.transpose() * u);
}

} // namespace

Eigen::Matrix<double, 16, 1> quad8_edge_distributed_load(int face, const Quad8Coords& node_coords,
                                                         const Eigen::Vector2d& traction,
                                                         int num_gauss) {
    if (face < 0 || face > 3) {
        throw Error(ErrorKind::InvalidArgument,
                    "face id " + std::to_string(face) + " out of range 0..3");
    }
    const GaussRule1D g = gauss_legendre_1d(num_gauss);
    // Edge nodes in parametric order s = -1, 0, +1.
    const int edge[3] = {face, 4 + face, (face + 1) % 4};

    Eigen::Matrix<double, 16, 1> loads = Eigen::Matrix<double, 16, 1>::Zero();
    for (std::size_t q = 0; q < g.points.size(); ++q) {
        const double s = g.points[q];
        const double N[3] = {0.5 * s * (s - 1.0), 1.0 - s * s, 0.5 * s * (s + 1.0)};
        const double dN[3] = {s - 0.5, -2.0 * s, s + 0.5};
        Eigen::Vector2d tangent = Eigen::Vector2d::Zero();
        for (int a = 0; a < 3; ++a) tangent += dN[a] * node_coords.row(edge[a]).transpose();
        const double ds = tangent.norm() * g.weights[q];
        for (int a = 0; a < 3; ++a) {
            loads.segment<2>(2 * edge[a]) += N[a] * ds * traction;
        }
    }
    return loads;
}

std::vector<Eigen::Vector2d> quad8_physical_gradient(const Quad8Coords& node_coords,
                                                     const Quad8Values& node_values,
                                                     std::span<const Eigen::Vector2d> points) {
    const double area = bounding_box_area(node_coords);
    std::vector<Eigen::Vector2d> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(physical_gradient(map_point(node_coords, p, area), node_values));
    }
    return out;
}

Eigen::Vector2d quad8_integral_of_gradient(const Quad8Coords& node_coords,
                                           const Quad8Values& node_values, int num_gauss) {
    const QuadratureRule rule = quad_quadrature(num_gauss);
    const double area = bounding_box_area(node_coords);
    Eigen::Vector2d total = Eigen::Vector2d::Zero();
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const MappedPoint m = map_point(node_coords, rule.points[q], area);
        total += rule.weights[q] * std::abs(m.det) * physical_gradient(m, node_values);
    }
    return total;
}

} // namespace structkit::fem2d
