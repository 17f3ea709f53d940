#include "structkit/fem2d/quadrature.hpp"

#include <cmath>
#include <string>

#include "structkit/errors.hpp"

namespace structkit::fem2d {

GaussRule1D gauss_legendre_1d(int num_points) {
    switch (num_points) {
        case 1:
            return {{0.0}, {2.0}};
        case 2: {
            const double a = 1.0 / std::sqrt(3.0);
            return {{-a, a}, {1.0, 1.0}};
        }
        case 3: {
            const double a = std::sqrt(3.0 / 5.0);
            return {{-a, 0.0, a}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
        }
        default:
            throw Error(ErrorKind::InvalidArgument,
                        "unsupported 1D Gauss point count " + std::to_string(num_points) +
                            " (expected 1, 2 or 3)");
    }
}

QuadratureRule quad_quadrature(int num_points) {
    int per_axis = 0;
    switch (num_points) {
        case 1: per_axis = 1; break;
        case 4: per_axis = 2; break;
        case 9: per_axis = 3; break;
        default:
            throw Error(ErrorKind::InvalidArgument,
                        "unsupported quadrilateral point count " + std::to_string(num_points) +
                            " (expected 1, 4 or 9)");
    }
    const GaussRule1D g = gauss_legendre_1d(per_axis);
    QuadratureRule rule;
    // ξ varies fastest.
    for (int j = 0; j < per_axis; ++j) {
        for (int i = 0; i < per_axis; ++i) {
            rule.points.emplace_back(g.points[i], g.points[j]);
            rule.weights.push_back(g.weights[i] * g.weights[j]);
        }
    }
    return rule;
}

QuadratureRule tri_quadrature(int num_points) {
    QuadratureRule rule;
    switch (num_points) {
        case 1:
            rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
            rule.weights = {0.5};
            break;
        case 3:
            rule.points = {{0.5, 0.0}, {0.5, 0.5}, {0.0, 0.5}};
            rule.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
            break;
        case 4:
            rule.points = {{1.0 / 3.0, 1.0 / 3.0}, {0.6, 0.2}, {0.2, 0.6}, {0.2, 0.2}};
            rule.weights = {-27.0 / 96.0, 25.0 / 96.0, 25.0 / 96.0, 25.0 / 96.0};
            break;
        default:
            throw Error(ErrorKind::InvalidArgument,
                        "unsupported triangle point count " + std::to_string(num_points) +
                            " (expected 1, 3 or 4)");
    }
    return rule;
}

} // namespace structkit::fem2d
