#include "structkit/model.hpp"

#include <cmath>
#include <sstream>

#include "structkit/errors.hpp"

namespace structkit {

namespace {

constexpr double kUnitTolerance = 1e-8;
constexpr double kParallelTolerance = 1e-8;

bool finite(const Point3& p) {
    return std::isfinite(p.x()) && std::isfinite(p.y()) && std::isfinite(p.z());
}

void check_section(const Section& s, std::size_t e, ValidationReport& out) {
    auto bad = [&](const char* what) {
        std::ostringstream msg;
        msg << "bad section on element " << e << ": " << what;
        out.push_back({ViolationKind::BadSection, msg.str()});
    };
    if (!(s.E > 0.0)) bad("E must be positive");
    if (!(s.A > 0.0)) bad("A must be positive");
    if (!(s.Iy > 0.0)) bad("Iy must be positive");
    if (!(s.Iz > 0.0)) bad("Iz must be positive");
    if (!(s.J > 0.0)) bad("J must be positive");
    if (!(s.nu > -1.0 && s.nu < 0.5)) bad("nu must lie in (-1, 0.5)");
    if (s.I_rho && !(*s.I_rho > 0.0)) bad("I_rho must be positive");
}

} // namespace

std::size_t global_dof_index(NodeId node, int local_dof, std::size_t num_nodes) {
    if (node >= num_nodes) {
        throw Error(ErrorKind::InvalidArgument,
                    "node " + std::to_string(node) + " out of range (" +
                        std::to_string(num_nodes) + " nodes)");
    }
    if (local_dof < 0 || local_dof >= kDofsPerNode) {
        throw Error(ErrorKind::InvalidArgument,
                    "local dof " + std::to_string(local_dof) + " out of range 0..5");
    }
    return kDofsPerNode * node + static_cast<std::size_t>(local_dof);
}

ValidationReport validate_model(const FrameModel& model) {
    ValidationReport report;
    const std::size_t n = model.num_nodes();

    for (std::size_t i = 0; i < n; ++i) {
        if (!finite(model.nodes[i])) {
            report.push_back({ViolationKind::NonFiniteCoordinate,
                              "non-finite coordinate at node " + std::to_string(i)});
        }
    }

    for (std::size_t e = 0; e < model.elements.size(); ++e) {
        const auto& el = model.elements[e];
        const bool refs_ok = el.node_i < n && el.node_j < n;
        if (!refs_ok) {
            report.push_back({ViolationKind::BadNodeReference,
                              "bad node reference in element " + std::to_string(e)});
        }
        if (el.node_i == el.node_j) {
            report.push_back({ViolationKind::DegenerateElement,
                              "degenerate element " + std::to_string(e) +
                                  ": node_i equals node_j"});
        } else if (refs_ok && (model.nodes[el.node_j] - model.nodes[el.node_i]).norm() == 0.0) {
            report.push_back({ViolationKind::DegenerateElement,
                              "degenerate element " + std::to_string(e) + ": zero length"});
        }
        check_section(el.section, e, report);

        if (el.local_z) {
            const Eigen::Vector3d& z = *el.local_z;
            if (!finite(z) || std::abs(z.norm() - 1.0) > kUnitTolerance) {
                report.push_back({ViolationKind::BadLocalZ,
                                  "bad local_z on element " + std::to_string(e) +
                                      ": not unit length"});
            } else if (refs_ok && el.node_i != el.node_j) {
                const Eigen::Vector3d d = model.nodes[el.node_j] - model.nodes[el.node_i];
                const double len = d.norm();
                if (len > 0.0 && std::abs(z.dot(d / len)) >= 1.0 - kParallelTolerance) {
                    report.push_back({ViolationKind::BadLocalZ,
                                      "bad local_z on element " + std::to_string(e) +
                                          ": parallel to element axis"});
                }
            }
        }
    }

    bool any_fixed = false;
    for (const auto& [node, support] : model.boundary) {
        if (node >= n) {
            report.push_back({ViolationKind::BadBoundary,
                              "boundary condition on missing node " + std::to_string(node)});
            continue;
        }
        for (int k = 0; k < kDofsPerNode; ++k) {
            if (support.fixed[k]) {
                any_fixed = true;
                if (!std::isfinite(support.values[k])) {
                    report.push_back({ViolationKind::BadBoundary,
                                      "non-finite prescribed value at node " +
                                          std::to_string(node)});
                }
            }
        }
    }
    if (!any_fixed) {
        report.push_back({ViolationKind::Unconstrained,
                          "unconstrained model: no DOF is constrained"});
    }

    for (const auto& [node, load] : model.loads) {
        if (node >= n) {
            report.push_back({ViolationKind::BadLoad,
                              "load on missing node " + std::to_string(node)});
            continue;
        }
        for (double c : load) {
            if (!std::isfinite(c)) {
                report.push_back({ViolationKind::BadLoad,
                                  "non-finite load at node " + std::to_string(node)});
                break;
            }
        }
    }
    return report;
}

void require_valid(const FrameModel& model, bool allow_unconstrained) {
    std::ostringstream msg;
    bool failed = false;
    for (const auto& v : validate_model(model)) {
        if (allow_unconstrained && v.kind == ViolationKind::Unconstrained) continue;
        msg << (failed ? "; " : "") << v.message;
        failed = true;
    }
    if (failed) throw Error(ErrorKind::Validation, msg.str());
}

} // namespace structkit
