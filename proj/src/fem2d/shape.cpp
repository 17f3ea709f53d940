#include "structkit/fem2d/shape.hpp"

namespace structkit::fem2d {

const std::vector<Eigen::Vector2d>& tri6_nodes() {
    static const std::vector<Eigen::Vector2d> nodes = {
        {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.5, 0.0}, {0.5, 0.5}, {0.0, 0.5},
    };
    return nodes;
}

const std::vector<Eigen::Vector2d>& quad8_nodes() {
    static const std::vector<Eigen::Vector2d> nodes = {
        {-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0},
        {0.0, -1.0},  {1.0, 0.0},  {0.0, 1.0}, {-1.0, 0.0},
    };
    return nodes;
}

ShapeEval tri6_shape(const Eigen::Vector2d& point) {
    const double xi = point.x();
    const double eta = point.y();
    const double l1 = 1.0 - xi - eta;
    const double l2 = xi;
    const double l3 = eta;

    ShapeEval out;
    out.values.resize(6);
    out.values << l1 * (2.0 * l1 - 1.0), l2 * (2.0 * l2 - 1.0), l3 * (2.0 * l3 - 1.0),
        4.0 * l1 * l2, 4.0 * l2 * l3, 4.0 * l3 * l1;

    // dl1 = (-1, -1), dl2 = (1, 0), dl3 = (0, 1)
    out.gradients.resize(6, 2);
    out.gradients << -(4.0 * l1 - 1.0), -(4.0 * l1 - 1.0),
                     4.0 * l2 - 1.0, 0.0,
                     0.0, 4.0 * l3 - 1.0,
                     4.0 * (l1 - l2), -4.0 * l2,
                     4.0 * l3, 4.0 * l2,
                     -4.0 * l3, 4.0 * (l1 - l3);
    return out;
}

ShapeEval quad8_shape(const Eigen::Vector2d& point) {
    const double xi = point.x();
    const double eta = point.y();
    const auto& nodes = quad8_nodes();

    ShapeEval out;
    out.values.resize(8);
    out.gradients.resize(8, 2);
    for (int a = 0; a < 4; ++a) {
        const double xa = nodes[a].x();
        const double ya = nodes[a].y();
        const double s = 1.0 + xi * xa;
        const double t = 1.0 + eta * ya;
        out.values(a) = 0.25 * s * t * (xi * xa + eta * ya - 1.0);
        out.gradients(a, 0) = 0.25 * xa * t * (2.0 * xi * xa + eta * ya);
        out.gradients(a, 1) = 0.25 * ya * s * (xi * xa + 2.0 * eta * ya);
    }
    for (int a = 4; a < 8; ++a) {
        const double xa = nodes[a].x();
        const double ya = nodes[a].y();
        if (xa == 0.0) {
            out.values(a) = 0.5 * (1.0 - xi * xi) * (1.0 + eta * ya);
            out.gradients(a, 0) = -xi * (1.0 + eta * ya);
            out.gradients(a, 1) = 0.5 * (1.0 - xi * xi) * ya;
        } else {
            out.values(a) = 0.5 * (1.0 + xi * xa) * (1.0 - eta * eta);
            out.gradients(a, 0) = 0.5 * xa * (1.0 - eta * eta);
            out.gradients(a, 1) = -eta * (1.0 + xi * xa);
        }
    }
    return out;
}

std::vector<ShapeEval> tri6_shape(std::span<const Eigen::Vector2d> points) {
    std::vector<ShapeEval> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(tri6_shape(p));
    return out;
}

std::vector<ShapeEval> quad8_shape(std::span<const Eigen::Vector2d> points) {
    std::vector<ShapeEval> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(quad8_shape(p));
    return out;
}

} // namespace structkit::fem2d
