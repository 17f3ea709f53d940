#include "structkit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "structkit/errors.hpp"
#include "structkit/fem1d.hpp"
#include "structkit/fem2d/mesh.hpp"
#include "structkit/io.hpp"

namespace structkit::cli {

using nlohmann::json;

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io:
            return kIoFailure;
        case ErrorKind::Parse:
        case ErrorKind::Validation:
        case ErrorKind::InvalidArgument:
        case ErrorKind::Configuration:
            return kParseFailure;
        default:
            return kSolverFailure;
    }
}

json matrix_rows(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json element_report(const ElementOptions& opt) {
    const Section& s = opt.section;
    json r = {{"schema_version", io::kReportSchemaVersion}, {"analysis", "element"},
              {"kind", opt.kind}};
    if (opt.kind == "elastic") {
        r["matrix"] =
            matrix_rows(local_elastic_stiffness_3d(s.E, s.nu, s.A, opt.L, s.Iy, s.Iz, s.J));
    } else if (opt.kind == "geometric") {
        r["matrix"] = matrix_rows(
            local_geometric_stiffness_3d(opt.L, s.A, s.effective_i_rho(), opt.forces));
    } else if (opt.kind == "transform") {
        r["matrix"] = matrix_rows(transformation_matrix_3d(opt.p_i, opt.p_j, opt.local_z));
    } else if (opt.kind == "loads") {
        const Vector12 f = local_element_loads(s, opt.p_i, opt.p_j, opt.local_z, opt.u_global);
        r["vector"] = std::vector<double>(f.data(), f.data() + f.size());
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown element kind '" + opt.kind + "'");
    }
    return r;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.output_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot open output file " + config.output_path);
    file << text;
    if (!file) throw Error(ErrorKind::Io, "failed writing " + config.output_path);
}

std::string produce(const RunConfig& config) {
    const bool csv = config.format == "csv";
    if (config.format != "json" && !csv) {
        throw Error(ErrorKind::InvalidArgument, "format must be json or csv");
    }
    if (csv && config.command != "static") {
        throw Error(ErrorKind::InvalidArgument, "csv output is only available for static");
    }
    const SolverSettings settings = effective_settings(config);
    check_settings(settings);

    json report;
    if (config.command == "static" || config.command == "buckle") {
        if (config.model_path.empty()) throw Error(ErrorKind::InvalidArgument, "--model is required");
        const FrameModel model = io::read_model(config.model_path);
        require_valid(model, /*allow_unconstrained=*/true);
        if (config.command == "static") {
            const StaticSolution sol = solve_linear_elastic_frame(model, settings);
            if (csv) {
                std::ostringstream os;
                io::write_static_csv(os, sol);
                return os.str();
            }
            report = io::static_report(sol, settings);
        } else {
            report = io::buckling_report(elastic_critical_load(model, settings), settings);
        }
    } else if (config.command == "mesh2d") {
        const MeshOptions& m = config.mesh;
        if (m.kind == "tri6") {
            report = io::mesh_to_json(
                fem2d::tri6_mesh_rectangle(m.x_lo, m.y_lo, m.x_hi, m.y_hi, m.nx, m.ny));
        } else if (m.kind == "quad8") {
            report = io::mesh_to_json(
                fem2d::quad8_mesh_rectangle(m.x_lo, m.y_lo, m.x_hi, m.y_hi, m.nx, m.ny));
        } else {
            throw Error(ErrorKind::InvalidArgument, "mesh kind must be tri6 or quad8");
        }
    } else if (config.command == "mesh1d") {
        const MeshOptions& m = config.mesh;
        report = io::mesh_to_json(fem1d::generate_uniform_1d_mesh(m.x_min, m.x_max, m.num_elements));
    } else if (config.command == "element") {
        report = element_report(config.element);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + config.command + "'");
    }
    return report.dump(2) + "\n";
}

} // namespace

SolverSettings effective_settings(const RunConfig& config) {
    SolverSettings s;
    if (config.condition_limit) s.condition_limit = *config.condition_limit;
    if (config.eig_floor) s.eig_positivity_floor = *config.eig_floor;
    return s;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto fail = [&](std::string_view name, const std::string& message, int code) {
        err << json{{"error", name}, {"message", message}, {"exit_code", code}}.dump() << "\n";
        return code;
    };
    try {
        emit(config, out, produce(config));
        return kOk;
    } catch (const Error& e) {
        return fail(e.name(), e.what(), exit_code_for(e.kind()));
    } catch (const std::exception& e) {
        return fail("internal-error", e.what(), kSolverFailure);
    }
}

} // namespace structkit::cli
