#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "structkit/elements.hpp"
#include "structkit/solvers.hpp"

namespace structkit::cli {

enum ExitCode : int {
    kOk = 0,
    kParseFailure = 2,
    kSolverFailure = 3,
    kIoFailure = 4,
};

struct MeshOptions {
    std::string kind = "tri6";  // mesh2d: tri6 | quad8
    double x_lo = 0.0, y_lo = 0.0, x_hi = 1.0, y_hi = 1.0;
    int nx = 1, ny = 1;
    double x_min = 0.0, x_max = 1.0;  // mesh1d
    int num_elements = 1;
};

struct ElementOptions {
    std::string kind = "elastic";  // elastic | geometric | transform | loads
    Section section{1.0, 0.3, 1.0, 1.0, 1.0, 1.0, std::nullopt};
    double L = 1.0;
    GeometricForces forces;
    Point3 p_i = Point3::Zero();
    Point3 p_j = Point3::UnitX();
    std::optional<Eigen::Vector3d> local_z;
    Vector12 u_global = Vector12::Zero();
};

struct RunConfig {
    std::string command;          // static | buckle | mesh2d | mesh1d | element
    std::string model_path;
    std::string output_path = "-";  // "-" writes to stdout
    std::string format = "json";    // json | csv (csv: static only)
    std::optional<double> condition_limit;
    std::optional<double> eig_floor;
    MeshOptions mesh;
    ElementOptions element;
};

SolverSettings effective_settings(const RunConfig& config);

/// Executes one command. Reports go to config.output_path (or `out` for
/// "-"); failures print a one-line JSON error object on `err`.
/// Returns 0 on success, 2 for bad input, 3 for solver failures, 4 for I/O.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace structkit::cli
