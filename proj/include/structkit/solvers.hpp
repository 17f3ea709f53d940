#pragma once

#include <Eigen/Dense>

#include "structkit/model.hpp"

namespace structkit {

struct SolverSettings {
    /// Reduced systems whose estimated condition number reaches this are rejected.
    double condition_limit = 1e16;
    /// Eigenvalues at or below this are not candidates for λ_cr.
    double eig_positivity_floor = 1e-10;
    /// Largest |Im λ| / |λ| treated as real.
    double complex_tolerance = 1e-8;
};

/// Throws InvalidArgument unless every threshold is positive.
void check_settings(const SolverSettings& settings);

/// 2-norm condition number of a square matrix (exact, via eigenvalues when
/// symmetric and singular values otherwise). Infinity when singular.
double condition_number(const Eigen::MatrixXd& m);

/// Solves K_ff Δ_f = F_f − K_fc Δ_c. `prescribed` holds Δ_c in the order of
/// `partition.fixed`. Reactions are the support forces K_c Δ − F_c, so that
/// applied loads plus reactions balance; they are zero on free DOFs.
/// Works for any DOF count, not only 6 per node.
StaticSolution solve_partitioned_linear(const Eigen::MatrixXd& K,
                                        const Eigen::VectorXd& F,
                                        const DofPartition& partition,
                                        const Eigen::VectorXd& prescribed,
                                        const SolverSettings& settings = {});

/// Smallest positive λ with (K_e + λ K_g) φ = 0 on the free DOFs, solved as
/// the general pencil K_e φ = λ (−K_g) φ. The mode is embedded into the full
/// DOF vector (zeros at fixed DOFs) with its largest-magnitude entry = +1.
BucklingSolution solve_buckling_eigen(const Eigen::MatrixXd& K_elastic,
                                      const Eigen::MatrixXd& K_geometric,
                                      const DofPartition& partition,
                                      const SolverSettings& settings = {});

StaticSolution solve_linear_elastic_frame(const FrameModel& model,
                                          const SolverSettings& settings = {});

/// The whole applied load map is the reference load; P_cr = λ_cr · P_ref.
BucklingSolution elastic_critical_load(const FrameModel& model,
                                       const SolverSettings& settings = {});

} // namespace structkit
