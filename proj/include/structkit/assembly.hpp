#pragma once

#include <array>

#include <Eigen/Dense>

#include "structkit/elements.hpp"
#include "structkit/model.hpp"

namespace structkit {

/// Global DOF indices of an element's 12 local DOFs.
std::array<std::size_t, 12> element_dof_map(const FrameModel& model, const FrameElement& element);

/// K = Σ_e scatter(Γ_eᵀ k_e Γ_e). Requires a structurally valid model;
/// supports are not needed.
Eigen::MatrixXd assemble_global_elastic_stiffness(const FrameModel& model);

/// Recovers each element's local end forces from `u_global`, builds the
/// local geometric stiffness from them, rotates to global and scatters.
/// The result is symmetrized as (K_g + K_gᵀ) / 2.
Eigen::MatrixXd assemble_global_geometric_stiffness(const FrameModel& model,
                                                    const Eigen::VectorXd& u_global);

/// F[6 node + k] = k-th load component at that node.
Eigen::VectorXd assemble_global_loads(const FrameModel& model);

/// Both index lists ascending.
DofPartition partition_dofs(const FrameModel& model);

/// Prescribed displacement for each entry of partition_dofs(model).fixed.
Eigen::VectorXd prescribed_values(const FrameModel& model, const DofPartition& partition);

} // namespace structkit
