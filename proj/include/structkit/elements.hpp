#pragma once

#include <optional>

#include <Eigen/Dense>

#include "structkit/model.hpp"

namespace structkit {

// Element-local DOF order: [u1, v1, w1, θx1, θy1, θz1, u2, v2, w2, θx2, θy2, θz2].
// End forces use the same order: [Fx, Fy, Fz, Mx, My, Mz] at node i, then j.
using Matrix12 = Eigen::Matrix<double, 12, 12>;
using Vector12 = Eigen::Matrix<double, 12, 1>;

/// 12x12 Euler–Bernoulli frame stiffness in local axes; G = E / (2(1 + nu)).
Matrix12 local_elastic_stiffness_3d(double E, double nu, double A, double L, double Iy,
                                    double Iz, double J);

/// Rows of the returned 3x3 are the local axes (ex, ey, ez) in global
/// components. ex runs from p_i to p_j, ey = normalize(ref × ex), ez = ex × ey.
/// Without `local_z` the reference is global Z, or global Y when
/// |ex · Z| > 1 - 1e-8.
Eigen::Matrix3d direction_cosines(const Point3& p_i, const Point3& p_j,
                                  const std::optional<Eigen::Vector3d>& local_z = std::nullopt);

/// Block-diagonal Γ with four copies of direction_cosines(). Maps global
/// to local: u_local = Γ u_global, and k_global = Γᵀ k_local Γ.
Matrix12 transformation_matrix_3d(const Point3& p_i, const Point3& p_j,
                                  const std::optional<Eigen::Vector3d>& local_z = std::nullopt);

/// End forces the geometric stiffness depends on; taken from the local
/// end-force vector at indices 6, 9, 4, 5, 10, 11.
struct GeometricForces {
    double Fx2 = 0.0;  // axial force at node j, tension positive
    double Mx2 = 0.0;
    double My1 = 0.0;
    double Mz1 = 0.0;
    double My2 = 0.0;
    double Mz2 = 0.0;

    static GeometricForces from_end_forces(const Vector12& f) {
        return {f(6), f(9), f(4), f(5), f(10), f(11)};
    }
};

/// Initial-stress stiffness with axial, bending-moment and torsion coupling,
/// including the Wagner term Fx2 I_rho / (A L). Linear in the forces.
Matrix12 local_geometric_stiffness_3d(double L, double A, double I_rho,
                                      const GeometricForces& forces);

/// k_e_local · (Γ · u_global_element).
Vector12 local_element_loads(const Section& section, const Point3& p_i, const Point3& p_j,
                             const std::optional<Eigen::Vector3d>& local_z,
                             const Vector12& u_global_element);

} // namespace structkit
