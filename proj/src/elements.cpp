#include "structkit/elements.hpp"

#include <cmath>

#include "structkit/errors.hpp"

namespace structkit {

namespace {

constexpr double kUnitTolerance = 1e-8;
constexpr double kParallelTolerance = 1e-8;

} // namespace

Matrix12 local_elastic_stiffness_3d(double E, double nu, double A, double L, double Iy,
                                    double Iz, double J) {
    if (!(L > 0.0)) throw Error(ErrorKind::DegenerateElement, "element length must be positive");

    Matrix12 k = Matrix12::Zero();

    const double axial = E * A / L;
    k(0, 0) = k(6, 6) = axial;
    k(0, 6) = k(6, 0) = -axial;

    const double torsion = E * J / (2.0 * (1.0 + nu) * L);
    k(3, 3) = k(9, 9) = torsion;
    k(3, 9) = k(9, 3) = -torsion;

    // Bending about local z: v and θz (DOFs 1, 5, 7, 11).
    const double z12 = 12.0 * E * Iz / (L * L * L);
    const double z6 = 6.0 * E * Iz / (L * L);
    const double z4 = 4.0 * E * Iz / L;
    const double z2 = 2.0 * E * Iz / L;
    k(1, 1) = k(7, 7) = z12;
    k(1, 7) = k(7, 1) = -z12;
    k(1, 5) = k(5, 1) = k(1, 11) = k(11, 1) = z6;
    k(5, 7) = k(7, 5) = k(7, 11) = k(11, 7) = -z6;
    k(5, 5) = k(11, 11) = z4;
    k(5, 11) = k(11, 5) = z2;

    // Bending about local y: w and θy (DOFs 2, 4, 8, 10). Positive θy
    // lowers w along +x, hence the flipped coupling signs.
    const double y12 = 12.0 * E * Iy / (L * L * L);
    const double y6 = 6.0 * E * Iy / (L * L);
    const double y4 = 4.0 * E * Iy / L;
    const double y2 = 2.0 * E * Iy / L;
    k(2, 2) = k(8, 8) = y12;
    k(2, 8) = k(8, 2) = -y12;
    k(2, 4) = k(4, 2) = k(2, 10) = k(10, 2) = -y6;
    k(4, 8) = k(8, 4) = k(8, 10) = k(10, 8) = y6;
    k(4, 4) = k(10, 10) = y4;
    k(4, 10) = k(10, 4) = y2;
    return k;
}

Eigen::Matrix3d direction_cosines(const Point3& p_i, const Point3& p_j,
                                  const std::optional<Eigen::Vector3d>& local_z) {
    const Eigen::Vector3d d = p_j - p_i;
    const double L = d.norm();
    if (!(L > 0.0)) throw Error(ErrorKind::DegenerateElement, "zero-length element");
    const Eigen::Vector3d ex = d / L;

    Eigen::Vector3d ref;
    if (local_z) {
        ref = *local_z;
        if (!ref.allFinite() || std::abs(ref.norm() - 1.0) > kUnitTolerance) {
            throw Error(ErrorKind::InvalidArgument, "local_z must be a unit vector");
        }
        if (std::abs(ref.dot(ex)) >= 1.0 - kParallelTolerance) {
            throw Error(ErrorKind::InvalidArgument, "local_z is parallel to the element axis");
        }
    } else if (std::abs(ex.z()) > 1.0 - kParallelTolerance) {
        ref = Eigen::Vector3d::UnitY();
    } else {
        ref = Eigen::Vector3d::UnitZ();
    }

    const Eigen::Vector3d ey = ref.cross(ex).normalized();
    const Eigen::Vector3d ez = ex.cross(ey);

    Eigen::Matrix3d R;
    R.row(0) = ex.transpose();
    R.row(1) = ey.transpose();
    R.row(2) = ez.transpose();
    return R;
}

Matrix12 transformation_matrix_3d(const Point3& p_i, const Point3& p_j,
                                  const std::optional<Eigen::Vector3d>& local_z) {
    const Eigen::Matrix3d R = direction_cosines(p_i, p_j, local_z);
    Matrix12 gamma = Matrix12::Zero();
    for (int b = 0; b < 4; ++b) gamma.block<3, 3>(3 * b, 3 * b) = R;
    return gamma;
}

Matrix12 local_geometric_stiffness_3d(double L, double A, double I_rho,
                                      const GeometricForces& f) {
    if (!(L > 0.0)) throw Error(ErrorKind::DegenerateElement, "element length must be positive");
    if (!(A > 0.0)) throw Error(ErrorKind::DegenerateElement, "area must be positive");
    if (!(I_rho > 0.0)) throw Error(ErrorKind::InvalidArgument, "I_rho must be positive");

    const double Fx2 = f.Fx2, Mx2 = f.Mx2;
    const double My1 = f.My1, Mz1 = f.Mz1, My2 = f.My2, Mz2 = f.Mz2;

    Matrix12 k = Matrix12::Zero();
    // Strict upper triangle.
    k(0, 6) = -Fx2 / L;
    k(1, 3) = My1 / L;
    k(1, 4) = Mx2 / L;
    k(1, 5) = Fx2 / 10.0;
    k(1, 7) = -6.0 * Fx2 / (5.0 * L);
    k(1, 9) = My2 / L;
    k(1, 10) = -Mx2 / L;
    k(1, 11) = Fx2 / 10.0;
    k(2, 3) = Mz1 / L;
    k(2, 4) = -Fx2 / 10.0;
    k(2, 5) = Mx2 / L;
    k(2, 8) = -6.0 * Fx2 / (5.0 * L);
    k(2, 9) = Mz2 / L;
    k(2, 10) = -Fx2 / 10.0;
    k(2, 11) = -Mx2 / L;
    k(3, 4) = -(2.0 * Mz1 - Mz2) / 6.0;
    k(3, 5) = (2.0 * My1 - My2) / 6.0;
    k(3, 7) = -My1 / L;
    k(3, 8) = -Mz1 / L;
    k(3, 9) = -Fx2 * I_rho / (A * L);  // Wagner
    k(3, 10) = -(Mz1 + Mz2) / 6.0;
    k(3, 11) = (My1 + My2) / 6.0;
    k(4, 7) = -Mx2 / L;
    k(4, 8) = Fx2 / 10.0;
    k(4, 9) = -(Mz1 + Mz2) / 6.0;
    k(4, 10) = -Fx2 * L / 30.0;
    k(4, 11) = Mx2 / 2.0;
    k(5, 7) = -Fx2 / 10.0;
    k(5, 8) = -Mx2 / L;
    k(5, 9) = (My1 + My2) / 6.0;
    k(5, 10) = -Mx2 / 2.0;
    k(5, 11) = -Fx2 * L / 30.0;
    k(7, 9) = -My2 / L;
    k(7, 10) = Mx2 / L;
    k(7, 11) = -Fx2 / 10.0;
    k(8, 9) = -Mz2 / L;
    k(8, 10) = Fx2 / 10.0;
    k(8, 11) = Mx2 / L;
    k(9, 10) = (Mz1 - 2.0 * Mz2) / 6.0;
    k(9, 11) = -(My1 - 2.0 * My2) / 6.0;

    Matrix12 out = k + k.transpose();

    out(0, 0) = out(6, 6) = Fx2 / L;
    out(1, 1) = out(2, 2) = out(7, 7) = out(8, 8) = 6.0 * Fx2 / (5.0 * L);
    out(3, 3) = out(9, 9) = Fx2 * I_rho / (A * L);
    out(4, 4) = out(5, 5) = out(10, 10) = out(11, 11) = 2.0 * Fx2 * L / 15.0;
    return out;
}

Vector12 local_element_loads(const Section& section, const Point3& p_i, const Point3& p_j,
                             const std::optional<Eigen::Vector3d>& local_z,
                             const Vector12& u_global_element) {
    const Matrix12 gamma = transformation_matrix_3d(p_i, p_j, local_z);
    const double L = (p_j - p_i).norm();
    const Matrix12 k = local_elastic_stiffness_3d(section.E, section.nu, section.A, L,
                                                  section.Iy, section.Iz, section.J);
    return k * (gamma * u_global_element);
}

} // namespace structkit
