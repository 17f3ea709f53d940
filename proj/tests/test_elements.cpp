#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "geometric_table.hpp"
#include "structkit/elements.hpp"
#include "structkit/errors.hpp"
#include "test_support.hpp"

using namespace structkit;

namespace {

GeometricForces unit_force(int which) {
    GeometricForces f;
    double* slots[6] = {&f.Fx2, &f.Mx2, &f.My1, &f.Mz1, &f.My2, &f.Mz2};
    *slots[which] = 1.0;
    return f;
}

GeometricForces random_forces(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

} // namespace

TEST(LocalElasticStiffness, BlockEntries) {
    const double E = 200e9, nu = 0.3, A = 0.01, L = 2.0, Iy = 8, Iz = 6, J = 1;
    const Matrix12 k = local_elastic_stiffness_3d(E, nu, A, L, Iy, Iz, J);

    EXPECT_EQ(k(0, 0), 1e9);
    const double G = E / 2.6;
    EXPECT_NEAR(k(3, 3), G * J / L, 1e-12 * G * J / L);
    EXPECT_NEAR(k(3, 9), -G * J / L, 1e-12 * G * J / L);

    const auto close = [](double got, double want) { EXPECT_NEAR(got, want, 1e-12 * std::abs(want)); };
    close(k(0, 6), -E * A / L);
    close(k(1, 1), 12 * E * Iz / (L * L * L));
    close(k(1, 5), 6 * E * Iz / (L * L));
    close(k(1, 11), 6 * E * Iz / (L * L));
    close(k(5, 5), 4 * E * Iz / L);
    close(k(5, 11), 2 * E * Iz / L);
    close(k(2, 2), 12 * E * Iy / (L * L * L));
    close(k(2, 4), -6 * E * Iy / (L * L));
    close(k(4, 4), 4 * E * Iy / L);
    close(k(4, 10), 2 * E * Iy / L);
    close(k(8, 10), 6 * E * Iy / (L * L));
    close(k(7, 11), -6 * E * Iz / (L * L));
}

TEST(LocalElasticStiffness, SymmetricWithSixRigidBodyModes) {
    const Matrix12 k = local_elastic_stiffness_3d(200e9, 0.3, 0.01, 2.0, 8, 6, 1);
    EXPECT_EQ(k, k.transpose());

    Eigen::SelfAdjointEigenSolver<Matrix12> es(k, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();

    const double top = ev.cwiseAbs().maxCoeff();
    int zeros = 0, positive = 0;
    for (int i = 0; i < 12; ++i) {
        if (std::abs(ev(i)) < 1e-10 * top) ++zeros;
        else if (ev(i) > 0.0) ++positive;
    }
    EXPECT_EQ(zeros, 6);
    EXPECT_EQ(positive, 6);
}

TEST(LocalElasticStiffness, RandomSectionsHaveSixRigidBodyModes) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> len(0.2, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Section s = testutil::random_section(rng);
        const Matrix12 k = local_elastic_stiffness_3d(s.E, s.nu, s.A, len(rng), s.Iy, s.Iz, s.J);
        Eigen::SelfAdjointEigenSolver<Matrix12> es(k, Eigen::EigenvaluesOnly);
        const double top = es.eigenvalues().cwiseAbs().maxCoeff();
        int zeros = 0;
        for (int i = 0; i < 12; ++i) {
            if (std::abs(es.eigenvalues()(i)) < 1e-10 * top) ++zeros;
            else EXPECT_GT(es.eigenvalues()(i), 0.0);
        }
        EXPECT_EQ(zeros, 6);
    }
}

TEST(LocalElasticStiffness, RejectsNonPositiveLength) {
    EXPECT_THROW(local_elastic_stiffness_3d(1, 0.3, 1, 0.0, 1, 1, 1), Error);
    EXPECT_THROW(local_elastic_stiffness_3d(1, 0.3, 1, -1.0, 1, 1, 1), Error);
}

TEST(Transformation, AlignedWithGlobalX) {
    const Matrix12 g = transformation_matrix_3d(Point3(1, 2, 3), Point3(4, 2, 3));
    EXPECT_EQ(g, Matrix12::Identity());
}

TEST(Transformation, VerticalElementFallsBackToGlobalY) {
    const Eigen::Matrix3d R = direction_cosines(Point3(0, 0, 0), Point3(0, 0, 5));
    const Eigen::Vector3d ex(0, 0, 1);
    const Eigen::Vector3d ey = Eigen::Vector3d::UnitY().cross(ex).normalized();
    EXPECT_EQ(Eigen::Vector3d(R.row(0)), ex);
    EXPECT_EQ(Eigen::Vector3d(R.row(1)), ey);
    EXPECT_EQ(Eigen::Vector3d(R.row(2)), ex.cross(ey));

    // Pointing down works too.
    const Eigen::Matrix3d down = direction_cosines(Point3(0, 0, 5), Point3(0, 0, 0));
    EXPECT_NEAR(down.determinant(), 1.0, 1e-15);
}

TEST(Transformation, PerpendicularLocalZBecomesLocalAxis) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Point3 a = testutil::random_unit(rng) * 3.0;
        const Point3 b = a + testutil::random_unit(rng) * 2.0;
        const Eigen::Vector3d ex = (b - a).normalized();
        const Eigen::Vector3d z = ex.cross(testutil::random_unit(rng)).normalized();
        const Eigen::Matrix3d R = direction_cosines(a, b, z);
        EXPECT_NEAR((Eigen::Vector3d(R.row(2)) - z).norm(), 0.0, 1e-12);
    }
}

TEST(Transformation, OrthonormalRightHandedIdenticalBlocks) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const Point3 a(c(rng), c(rng), c(rng));
        Point3 b(c(rng), c(rng), c(rng));
        if ((b - a).norm() < 1e-3) continue;
        std::optional<Eigen::Vector3d> z;
        if (coin(rng)) {
            const Eigen::Vector3d ex = (b - a).normalized();
            Eigen::Vector3d cand = testutil::random_unit(rng);
            while (std::abs(cand.dot(ex)) > 0.99) cand = testutil::random_unit(rng);
            z = cand;
        }
        const Matrix12 g = transformation_matrix_3d(a, b, z);
        EXPECT_LT((g * g.transpose() - Matrix12::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        const Eigen::Matrix3d R = g.block<3, 3>(0, 0);
        EXPECT_NEAR(R.determinant(), 1.0, 1e-12);
        for (int blk = 1; blk < 4; ++blk) EXPECT_EQ(Eigen::Matrix3d(g.block<3, 3>(3 * blk, 3 * blk)), R);
    }
}

TEST(Transformation, FallbackThresholdIsExact) {
    // ex = (s, 0, c) with c on either side of 1 - 1e-8.
    auto frame = [](double c) {
        const double s = std::sqrt(1.0 - c * c);
        return direction_cosines(Point3::Zero(), Point3(s, 0.0, c));
    };
    auto expected = [](double c, const Eigen::Vector3d& ref) {
        const double s = std::sqrt(1.0 - c * c);
        const Eigen::Vector3d ex = Point3(s, 0.0, c).normalized();
        return Eigen::Vector3d(ref.cross(ex).normalized());
    };
    for (double c : {1.0 - 2e-8, 1.0 - 1.5e-8}) {
        EXPECT_LT((Eigen::Vector3d(frame(c).row(1)) - expected(c, Eigen::Vector3d::UnitZ())).norm(), 1e-8);
    }
    for (double c : {1.0 - 5e-9, 1.0 - 1e-12, 1.0}) {
        EXPECT_LT((Eigen::Vector3d(frame(c).row(1)) - expected(c, Eigen::Vector3d::UnitY())).norm(), 1e-8);
    }
}

TEST(Transformation, Errors) {
    const Point3 p(1, 1, 1);
    try {
        transformation_matrix_3d(p, p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateElement);
    }
    try {
        transformation_matrix_3d(p, Point3(2, 1, 1), Eigen::Vector3d(0, 0, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    EXPECT_THROW(transformation_matrix_3d(p, Point3(2, 1, 1), Eigen::Vector3d(1, 0, 0)), Error);
    EXPECT_THROW(transformation_matrix_3d(p, Point3(2, 1, 1), Eigen::Vector3d(-1, 0, 0)), Error);
}

TEST(Transformation, GlobalizedStiffnessKeepsSpectrum) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Point3 a = testutil::random_unit(rng);
        const Point3 b = a + 2.5 * testutil::random_unit(rng);
        const Section s = testutil::random_section(rng);
        const Matrix12 k = local_elastic_stiffness_3d(s.E, s.nu, s.A, (b - a).norm(), s.Iy, s.Iz, s.J);
        const Matrix12 g = transformation_matrix_3d(a, b);
        const Matrix12 kg = g.transpose() * k * g;
        Eigen::SelfAdjointEigenSolver<Matrix12> e1(k, Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Matrix12> e2(0.5 * (kg + kg.transpose()), Eigen::EigenvaluesOnly);
        const double top = e1.eigenvalues().cwiseAbs().maxCoeff();
        EXPECT_LT((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff(), 1e-9 * top);
    }
}

TEST(LocalGeometricStiffness, Examples) {
    EXPECT_TRUE(local_geometric_stiffness_3d(2.0, 0.5, 0.1, {}).isZero(0.0));

    const Matrix12 k = local_geometric_stiffness_3d(1.0, 1.0, 1.0, unit_force(0));
    EXPECT_EQ(k(1, 1), 6.0 / 5.0);
    EXPECT_EQ(k(4, 4), 2.0 / 15.0);
    EXPECT_EQ(k(0, 6), -1.0);
    EXPECT_EQ(k(3, 9), -1.0);
}

TEST(LocalGeometricStiffness, MatchesCoefficientTableExactly) {
    for (int which = 0; which < 6; ++which) {
        const Matrix12 k = local_geometric_stiffness_3d(1.0, 1.0, 1.0, unit_force(which));
        Matrix12 expected = Matrix12::Zero();
        for (const auto& e : testutil::geometric_table_unit()) {
            expected(e.row, e.col) = e.coeff[which];
            expected(e.col, e.row) = e.coeff[which];
        }
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) {
                EXPECT_EQ(k(i, j), expected(i, j)) << "force " << which << " entry " << i << "," << j;
            }
        }
    }
}

TEST(LocalGeometricStiffness, ScalesWithLengthAreaAndInertia) {
    // Fx2 terms scale as 1/L, L^0 or L; the Wagner term as I_rho / A.
    const double L = 3.0, A = 0.2, Ir = 0.05;
    const Matrix12 k = local_geometric_stiffness_3d(L, A, Ir, unit_force(0));
    EXPECT_DOUBLE_EQ(k(1, 1), 6.0 / (5.0 * L));
    EXPECT_DOUBLE_EQ(k(1, 5), 0.1);
    EXPECT_DOUBLE_EQ(k(4, 10), -L / 30.0);
    EXPECT_DOUBLE_EQ(k(3, 3), Ir / (A * L));
    EXPECT_DOUBLE_EQ(k(3, 9), -Ir / (A * L));
}

TEST(LocalGeometricStiffness, SymmetricAndLinear) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const GeometricForces f1 = random_forces(rng), f2 = random_forces(rng);
        const Matrix12 k1 = local_geometric_stiffness_3d(1.7, 0.3, 0.02, f1);
        const Matrix12 k2 = local_geometric_stiffness_3d(1.7, 0.3, 0.02, f2);
        EXPECT_EQ(k1, k1.transpose());

        const GeometricForces sum{f1.Fx2 + f2.Fx2, f1.Mx2 + f2.Mx2, f1.My1 + f2.My1,
                                  f1.Mz1 + f2.Mz1, f1.My2 + f2.My2, f1.Mz2 + f2.Mz2};
        const Matrix12 ks = local_geometric_stiffness_3d(1.7, 0.3, 0.02, sum);
        EXPECT_LT((ks - k1 - k2).cwiseAbs().maxCoeff(), 1e-12 * (k1.norm() + k2.norm()));

        const GeometricForces scaled{-2.5 * f1.Fx2, -2.5 * f1.Mx2, -2.5 * f1.My1,
                                     -2.5 * f1.Mz1, -2.5 * f1.My2, -2.5 * f1.Mz2};
        const Matrix12 kc = local_geometric_stiffness_3d(1.7, 0.3, 0.02, scaled);
        EXPECT_LT((kc + 2.5 * k1).cwiseAbs().maxCoeff(), 1e-12 * k1.norm());
    }
}

TEST(LocalGeometricStiffness, Errors) {
    EXPECT_THROW(local_geometric_stiffness_3d(0.0, 1.0, 1.0, {}), Error);
    EXPECT_THROW(local_geometric_stiffness_3d(1.0, 0.0, 1.0, {}), Error);
}

TEST(LocalElementLoads, ZeroAndRigidMotions) {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Point3 a = 2.0 * testutil::random_unit(rng);
        const Point3 b = a + 1.5 * testutil::random_unit(rng);
        const Section s = testutil::random_section(rng);
        EXPECT_TRUE(local_element_loads(s, a, b, std::nullopt, Vector12::Zero()).isZero(0.0));

        // Rigid motion: translation t plus small rotation w about the origin.
        const Eigen::Vector3d t(u(rng), u(rng), u(rng));
        const Eigen::Vector3d w(u(rng), u(rng), u(rng));
        Vector12 d;
        d << t + w.cross(a), w, t + w.cross(b), w;
        const Vector12 f = local_element_loads(s, a, b, std::nullopt, d);
        const double L = (b - a).norm();
        const double knorm = local_elastic_stiffness_3d(s.E, s.nu, s.A, L, s.Iy, s.Iz, s.J).norm();
        EXPECT_LT(f.cwiseAbs().maxCoeff(), 1e-9 * knorm * d.norm());
    }
}

TEST(LocalElementLoads, AxialStretch) {
    const Section s = testutil::cantilever_section();
    const Point3 a(1, 2, 3);
    const Eigen::Vector3d dir = Eigen::Vector3d(1, 2, 2) / 3.0;
    const double L = 1.5, delta = 1e-3;
    const Point3 b = a + L * dir;
    Vector12 d = Vector12::Zero();
    d.segment<3>(6) = delta * dir;
    const Vector12 f = local_element_loads(s, a, b, std::nullopt, d);
    const double axial = s.E * s.A * delta / L;
    EXPECT_NEAR(f(0), -axial, 1e-9 * axial);
    EXPECT_NEAR(f(6), axial, 1e-9 * axial);
    for (int i : {1, 2, 3, 4, 5, 7, 8, 9, 10, 11}) EXPECT_NEAR(f(i), 0.0, 1e-9 * axial);
}
