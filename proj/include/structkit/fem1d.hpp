#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace structkit::fem1d {

struct Mesh1D {
    std::vector<double> node_coords;
    std::vector<std::pair<std::size_t, std::size_t>> connectivity;
};

/// Constant-property bar segment. Elements whose midpoint falls in
/// [x_start, x_end] take these properties.
struct BarRegion1D {
    double x_start = 0.0;
    double x_end = 0.0;
    double E = 0.0;
    double A = 0.0;
    double body_force = 0.0;
};

Mesh1D generate_uniform_1d_mesh(double x_min, double x_max, int num_elements);

/// (EA/L) [[1, -1], [-1, 1]]
Eigen::Matrix2d local_stiffness_1d(double E, double A, double L);

/// Two-node linear bar elements. Constant body force is lumped exactly
/// (f L / 2 per node). Returns nodal displacements; nodes in `dirichlet`
/// carry their prescribed values exactly.
Eigen::VectorXd solve_1d_linear_elastic(const Mesh1D& mesh,
                                        const std::vector<BarRegion1D>& regions,
                                        const std::map<std::size_t, double>& dirichlet,
                                        const std::map<std::size_t, double>& neumann);

} // namespace structkit::fem1d
