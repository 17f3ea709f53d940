#include "structkit/fem1d.hpp"

#include <cmath>
#include <string>

#include "structkit/errors.hpp"
#include "structkit/solvers.hpp"

namespace structkit::fem1d {

namespace {

const BarRegion1D& region_for(const std::vector<BarRegion1D>& regions, double x,
                              std::size_t element) {
    const BarRegion1D* best = nullptr;
    for (const auto& r : regions) {
        if (x < r.x_start || x > r.x_end) continue;
        // On a shared boundary the lower region wins.
        if (!best || r.x_start < best->x_start) best = &r;
    }
    if (!best) {
        throw Error(ErrorKind::Configuration,
                    "element " + std::to_string(element) + " is not covered by any region");
    }
    return *best;
}

void check_mesh(const Mesh1D& mesh) {
    const auto& x = mesh.node_coords;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) {
            throw Error(ErrorKind::InvalidArgument, "node coordinates must be strictly increasing");
        }
    }
    for (const auto& [a, b] : mesh.connectivity) {
        if (a >= x.size() || b >= x.size()) {
            throw Error(ErrorKind::InvalidArgument, "connectivity index out of range");
        }
    }
}

} // namespace

Mesh1D generate_uniform_1d_mesh(double x_min, double x_max, int num_elements) {
    if (num_elements < 1) {
        throw Error(ErrorKind::InvalidArgument, "num_elements must be at least 1");
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        throw Error(ErrorKind::InvalidArgument, "interval must satisfy x_min < x_max");
    }
    const auto n = static_cast<std::size_t>(num_elements);
    const double h = (x_max - x_min) / static_cast<double>(n);

    Mesh1D mesh;
    mesh.node_coords.resize(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        mesh.node_coords[i] = x_min + static_cast<double>(i) * h;
    }
    mesh.node_coords[n] = x_max;
    mesh.connectivity.reserve(n);
    for (std::size_t k = 0; k < n; ++k) mesh.connectivity.emplace_back(k, k + 1);
    return mesh;
}

Eigen::Matrix2d local_stiffness_1d(double E, double A, double L) {
    if (!(L > 0.0)) throw Error(ErrorKind::DegenerateElement, "bar length must be positive");
    if (!(E > 0.0) || !(A > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "E and A must be positive");
    }
    const double k = E * A / L;
    Eigen::Matrix2d m;
    m << k, -k, -k, k;
    return m;
}

Eigen::VectorXd solve_1d_linear_elastic(const Mesh1D& mesh,
                                        const std::vector<BarRegion1D>& regions,
                                        const std::map<std::size_t, double>& dirichlet,
                                        const std::map<std::size_t, double>& neumann) {
    check_mesh(mesh);
    const std::size_t n = mesh.node_coords.size();
    for (const auto& r : regions) {
        if (!(r.x_end > r.x_start) || !(r.E > 0.0) || !(r.A > 0.0)) {
            throw Error(ErrorKind::InvalidArgument,
                        "region requires x_end > x_start, E > 0 and A > 0");
        }
    }
    if (dirichlet.empty()) {
        throw Error(ErrorKind::SingularSystem, "at least one Dirichlet constraint is required");
    }

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd F = Eigen::VectorXd::Zero(n);

    for (std::size_t e = 0; e < mesh.connectivity.size(); ++e) {
        const auto [a, b] = mesh.connectivity[e];
        const double xa = mesh.node_coords[a];
        const double xb = mesh.node_coords[b];
        const BarRegion1D& r = region_for(regions, 0.5 * (xa + xb), e);
        const double L = std::abs(xb - xa);
        const Eigen::Matrix2d k = local_stiffness_1d(r.E, r.A, L);
        const std::size_t dofs[2] = {a, b};
        for (int i = 0; i < 2; ++i) {
            F(dofs[i]) += 0.5 * r.body_force * L;
            for (int j = 0; j < 2; ++j) K(dofs[i], dofs[j]) += k(i, j);
        }
    }
    for (const auto& [node, force] : neumann) {
        if (node >= n) throw Error(ErrorKind::InvalidArgument, "point force on missing node");
        F(node) += force;
    }

    DofPartition partition;
    Eigen::VectorXd prescribed(dirichlet.size());
    for (std::size_t i = 0, j = 0; i < n; ++i) {
        if (auto it = dirichlet.find(i); it != dirichlet.end()) {
            partition.fixed.push_back(i);
            prescribed(j++) = it->second;
        } else {
            partition.free.push_back(i);
        }
    }
    if (partition.fixed.size() != dirichlet.size()) {
        throw Error(ErrorKind::InvalidArgument, "Dirichlet constraint on missing node");
    }
    return solve_partitioned_linear(K, F, partition, prescribed).displacements;
}

} // namespace structkit::fem1d
