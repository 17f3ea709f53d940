#include "structkit/assembly.hpp"

#include <string>

#include "structkit/errors.hpp"

namespace structkit {

namespace {

void scatter(Eigen::MatrixXd& K, const std::array<std::size_t, 12>& dofs, const Matrix12& k) {
    for (int a = 0; a < 12; ++a) {
        for (int b = 0; b < 12; ++b) {
            K(static_cast<Eigen::Index>(dofs[a]), static_cast<Eigen::Index>(dofs[b])) += k(a, b);
        }
    }
}

} // namespace

std::array<std::size_t, 12> element_dof_map(const FrameModel& model,
                                            const FrameElement& element) {
    std::array<std::size_t, 12> dofs{};
    const std::size_t n = model.num_nodes();
    for (int k = 0; k < kDofsPerNode; ++k) {
        dofs[k] = global_dof_index(element.node_i, k, n);
        dofs[6 + k] = global_dof_index(element.node_j, k, n);
    }
    return dofs;
}

Eigen::MatrixXd assemble_global_elastic_stiffness(const FrameModel& model) {
    require_valid(model, /*allow_unconstrained=*/true);
    const auto ndof = static_cast<Eigen::Index>(model.num_dofs());
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(ndof, ndof);

    for (const auto& el : model.elements) {
        const Point3& pi = model.nodes[el.node_i];
        const Point3& pj = model.nodes[el.node_j];
        const Section& s = el.section;
        const Matrix12 gamma = transformation_matrix_3d(pi, pj, el.local_z);
        const Matrix12 k_local = local_elastic_stiffness_3d(s.E, s.nu, s.A, (pj - pi).norm(),
                                                            s.Iy, s.Iz, s.J);
        scatter(K, element_dof_map(model, el), gamma.transpose() * k_local * gamma);
    }
    return K;
}

Eigen::MatrixXd assemble_global_geometric_stiffness(const FrameModel& model,
                                                    const Eigen::VectorXd& u_global) {
    require_valid(model, /*allow_unconstrained=*/true);
    const auto ndof = static_cast<Eigen::Index>(model.num_dofs());
    if (u_global.size() != ndof) {
        throw Error(ErrorKind::InvalidArgument,
                    "displacement vector has " + std::to_string(u_global.size()) +
                        " entries, expected " + std::to_string(ndof));
    }
    Eigen::MatrixXd Kg = Eigen::MatrixXd::Zero(ndof, ndof);

    for (const auto& el : model.elements) {
        const Point3& pi = model.nodes[el.node_i];
        const Point3& pj = model.nodes[el.node_j];
        const auto dofs = element_dof_map(model, el);
        Vector12 u_el;
        for (int a = 0; a < 12; ++a) u_el(a) = u_global(static_cast<Eigen::Index>(dofs[a]));

        const Vector12 f_local = local_element_loads(el.section, pi, pj, el.local_z, u_el);
        const Matrix12 kg_local =
            local_geometric_stiffness_3d((pj - pi).norm(), el.section.A,
                                         el.section.effective_i_rho(),
                                         GeometricForces::from_end_forces(f_local));
        const Matrix12 gamma = transformation_matrix_3d(pi, pj, el.local_z);
        scatter(Kg, dofs, gamma.transpose() * kg_local * gamma);
    }
    return 0.5 * (Kg + Kg.transpose());
}

Eigen::VectorXd assemble_global_loads(const FrameModel& model) {
    const std::size_t n = model.num_nodes();
    Eigen::VectorXd F = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model.num_dofs()));
    for (const auto& [node, load] : model.loads) {
        for (int k = 0; k < kDofsPerNode; ++k) {
            F(static_cast<Eigen::Index>(global_dof_index(node, k, n))) += load[k];
        }
    }
    return F;
}

DofPartition partition_dofs(const FrameModel& model) {
    const std::size_t n = model.num_nodes();
    std::vector<bool> fixed(model.num_dofs(), false);
    for (const auto& [node, support] : model.boundary) {
        for (int k = 0; k < kDofsPerNode; ++k) {
            if (support.fixed[k]) fixed[global_dof_index(node, k, n)] = true;
        }
    }
    DofPartition p;
    for (std::size_t d = 0; d < fixed.size(); ++d) (fixed[d] ? p.fixed : p.free).push_back(d);
    return p;
}

Eigen::VectorXd prescribed_values(const FrameModel& model, const DofPartition& partition) {
    Eigen::VectorXd values(static_cast<Eigen::Index>(partition.fixed.size()));
    for (std::size_t i = 0; i < partition.fixed.size(); ++i) {
        const std::size_t dof = partition.fixed[i];
        const auto it = model.boundary.find(dof / kDofsPerNode);
        values(static_cast<Eigen::Index>(i)) =
            it == model.boundary.end() ? 0.0 : it->second.values[dof % kDofsPerNode];
    }
    return values;
}

} // namespace structkit
