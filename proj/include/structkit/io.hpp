#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "structkit/fem1d.hpp"
#include "structkit/fem2d/mesh.hpp"
#include "structkit/model.hpp"
#include "structkit/solvers.hpp"

namespace structkit::io {

inline constexpr int kReportSchemaVersion = 1;

// Model schema:
//   {
//     "nodes":    [[x, y, z], ...],
//     "elements": [{"i": 0, "j": 1,
//                   "section": {"E", "nu", "A", "Iy", "Iz", "J", "I_rho"?},
//                   "local_z": [x, y, z]?}, ...],
//     "boundary": {"<node>": [6 bools] | {"flags": [6 bools], "values": [6 numbers]}},
//     "loads":    {"<node>": [Fx, Fy, Fz, Mx, My, Mz]}
//   }
// Any schema mismatch throws Error{Parse}.
FrameModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const FrameModel& model);

FrameModel read_model(const std::string& path);

nlohmann::json settings_to_json(const SolverSettings& settings);

nlohmann::json static_report(const StaticSolution& solution, const SolverSettings& settings);
StaticSolution static_from_report(const nlohmann::json& report);

nlohmann::json buckling_report(const BucklingSolution& solution, const SolverSettings& settings);
BucklingSolution buckling_from_report(const nlohmann::json& report);

/// One row per node: node, ux, uy, uz, rx, ry, rz, Fx, Fy, Fz, Mx, My, Mz.
void write_static_csv(std::ostream& out, const StaticSolution& solution);

nlohmann::json mesh_to_json(const fem2d::Mesh2D& mesh);
nlohmann::json mesh_to_json(const fem1d::Mesh1D& mesh);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

} // namespace structkit::io
