#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace structkit {

using Point3 = Eigen::Vector3d;
using NodeId = std::size_t;

inline constexpr int kDofsPerNode = 6;

/// Beam cross-section and material. Units are whatever the caller uses
/// consistently across the model; nothing here converts.
struct Section {
    double E = 0.0;
    double nu = 0.0;
    double A = 0.0;
    double Iy = 0.0;
    double Iz = 0.0;
    double J = 0.0;
    std::optional<double> I_rho;

    /// Polar moment used for the Wagner coupling; defaults to Iy + Iz.
    double effective_i_rho() const { return I_rho.value_or(Iy + Iz); }
};

struct FrameElement {
    NodeId node_i = 0;
    NodeId node_j = 0;
    Section section;
    std::optional<Eigen::Vector3d> local_z;
};

/// Per-node support: a flag per DOF [u, v, w, θx, θy, θz] plus the
/// prescribed value for each flagged DOF (ignored where the flag is off).
struct Support {
    std::array<bool, 6> fixed{};
    std::array<double, 6> values{};

    static Support clamped() {
        Support s;
        s.fixed.fill(true);
        return s;
    }
    static Support pinned() {
        Support s;
        s.fixed = {true, true, true, false, false, false};
        return s;
    }
};

using NodalLoad = std::array<double, 6>;

struct FrameModel {
    std::vector<Point3> nodes;
    std::vector<FrameElement> elements;
    std::map<NodeId, Support> boundary;
    std::map<NodeId, NodalLoad> loads;

    std::size_t num_nodes() const { return nodes.size(); }
    std::size_t num_dofs() const { return kDofsPerNode * nodes.size(); }
};

struct DofPartition {
    std::vector<std::size_t> free;
    std::vector<std::size_t> fixed;
};

struct StaticSolution {
    Eigen::VectorXd displacements;
    Eigen::VectorXd reactions;
};

struct BucklingSolution {
    double lambda_cr = 0.0;
    Eigen::VectorXd mode;
};

/// Node-major layout: 6 * node + local_dof.
std::size_t global_dof_index(NodeId node, int local_dof, std::size_t num_nodes);

enum class ViolationKind {
    BadNodeReference,
    DegenerateElement,
    BadSection,
    BadLocalZ,
    NonFiniteCoordinate,
    BadBoundary,
    BadLoad,
    Unconstrained,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_model(const FrameModel& model);

/// Throws Error{Validation} listing every violation. With
/// `allow_unconstrained` the missing-support rule is skipped, which is what
/// assembly needs: a free-floating structure still has a well-defined K.
void require_valid(const FrameModel& model, bool allow_unconstrained = false);

} // namespace structkit
