#include "structkit/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <system_error>

#include "structkit/errors.hpp"

namespace structkit::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) parse_fail(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) parse_fail(where + ": expected a number");
    return v.get<double>();
}

std::size_t index_value(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        parse_fail(where + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::size_t node_key(const std::string& key, const std::string& where) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
    if (ec != std::errc{} || ptr != key.data() + key.size() || key.empty()) {
        parse_fail(where + ": node key \"" + key + "\" is not a node index");
    }
    return value;
}

template <std::size_t N>
std::array<double, N> number_array(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != N) {
        parse_fail(where + ": expected an array of " + std::to_string(N) + " numbers");
    }
    std::array<double, N> out{};
    for (std::size_t k = 0; k < N; ++k) out[k] = number(v[k], where);
    return out;
}

std::array<bool, 6> flag_array(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 6) parse_fail(where + ": expected an array of 6 booleans");
    std::array<bool, 6> out{};
    for (std::size_t k = 0; k < 6; ++k) {
        if (!v[k].is_boolean()) parse_fail(where + ": expected an array of 6 booleans");
        out[k] = v[k].get<bool>();
    }
    return out;
}

Eigen::Vector3d vec3(const json& v, const std::string& where) {
    const auto a = number_array<3>(v, where);
    return {a[0], a[1], a[2]};
}

Section section_from_json(const json& s, const std::string& where) {
    if (!s.is_object()) parse_fail(where + ": section must be an object");
    Section out;
    out.E = number(require(s, "E", where), where + ".E");
    out.nu = number(require(s, "nu", where), where + ".nu");
    out.A = number(require(s, "A", where), where + ".A");
    out.Iy = number(require(s, "Iy", where), where + ".Iy");
    out.Iz = number(require(s, "Iz", where), where + ".Iz");
    out.J = number(require(s, "J", where), where + ".J");
    if (s.contains("I_rho") && !s.at("I_rho").is_null()) {
        out.I_rho = number(s.at("I_rho"), where + ".I_rho");
    }
    return out;
}

json node_vectors(const Eigen::VectorXd& v, std::size_t node) {
    json row = json::array();
    for (int k = 0; k < kDofsPerNode; ++k) {
        row.push_back(v(static_cast<Eigen::Index>(kDofsPerNode * node + k)));
    }
    return row;
}

void check_report(const json& r, const char* analysis) {
    if (!r.is_object() || r.value("schema_version", -1) != kReportSchemaVersion ||
        r.value("analysis", std::string{}) != analysis) {
        parse_fail(std::string("not a schema-v1 ") + analysis + " report");
    }
}

} // namespace

FrameModel model_from_json(const json& j) {
    try {
        if (!j.is_object()) parse_fail("model must be a JSON object");
        FrameModel model;

        const json& nodes = require(j, "nodes", "model");
        if (!nodes.is_array()) parse_fail("nodes: expected an array");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            model.nodes.push_back(vec3(nodes[i], "nodes[" + std::to_string(i) + "]"));
        }

        const json& elements = require(j, "elements", "model");
        if (!elements.is_array()) parse_fail("elements: expected an array");
        for (std::size_t e = 0; e < elements.size(); ++e) {
            const std::string where = "elements[" + std::to_string(e) + "]";
            const json& el = elements[e];
            FrameElement out;
            out.node_i = index_value(require(el, "i", where), where + ".i");
            out.node_j = index_value(require(el, "j", where), where + ".j");
            out.section = section_from_json(require(el, "section", where), where + ".section");
            if (el.contains("local_z") && !el.at("local_z").is_null()) {
                out.local_z = vec3(el.at("local_z"), where + ".local_z");
            }
            model.elements.push_back(std::move(out));
        }

        if (j.contains("boundary")) {
            const json& b = j.at("boundary");
            if (!b.is_object()) parse_fail("boundary: expected an object keyed by node");
            for (const auto& [key, value] : b.items()) {
                const std::string where = "boundary." + key;
                Support s;
                if (value.is_array()) {
                    s.fixed = flag_array(value, where);
                } else if (value.is_object()) {
                    s.fixed = flag_array(require(value, "flags", where), where + ".flags");
                    if (value.contains("values")) {
                        s.values = number_array<6>(value.at("values"), where + ".values");
                    }
                } else {
                    parse_fail(where + ": expected flags array or {flags, values}");
                }
                model.boundary[node_key(key, where)] = s;
            }
        }

        if (j.contains("loads")) {
            const json& l = j.at("loads");
            if (!l.is_object()) parse_fail("loads: expected an object keyed by node");
            for (const auto& [key, value] : l.items()) {
                const std::string where = "loads." + key;
                model.loads[node_key(key, where)] = number_array<6>(value, where);
            }
        }
        return model;
    } catch (const json::exception& ex) {
        parse_fail(ex.what());
    }
}

json model_to_json(const FrameModel& model) {
    json j;
    j["nodes"] = json::array();
    for (const auto& p : model.nodes) j["nodes"].push_back({p.x(), p.y(), p.z()});
    j["elements"] = json::array();
    for (const auto& el : model.elements) {
        const Section& s = el.section;
        json section = {{"E", s.E}, {"nu", s.nu}, {"A", s.A},
                        {"Iy", s.Iy}, {"Iz", s.Iz}, {"J", s.J}};
        if (s.I_rho) section["I_rho"] = *s.I_rho;
        json e = {{"i", el.node_i}, {"j", el.node_j}, {"section", section}};
        if (el.local_z) e["local_z"] = {el.local_z->x(), el.local_z->y(), el.local_z->z()};
        j["elements"].push_back(e);
    }
    j["boundary"] = json::object();
    for (const auto& [node, s] : model.boundary) {
        j["boundary"][std::to_string(node)] = {{"flags", s.fixed}, {"values", s.values}};
    }
    j["loads"] = json::object();
    for (const auto& [node, load] : model.loads) j["loads"][std::to_string(node)] = load;
    return j;
}

FrameModel read_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open model file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        parse_fail(path + ": " + ex.what());
    }
    return model_from_json(j);
}

json settings_to_json(const SolverSettings& s) {
    return {{"condition_limit", s.condition_limit},
            {"eig_positivity_floor", s.eig_positivity_floor},
            {"complex_tolerance", s.complex_tolerance}};
}

json static_report(const StaticSolution& solution, const SolverSettings& settings) {
    json r;
    r["schema_version"] = kReportSchemaVersion;
    r["analysis"] = "static";
    r["settings"] = settings_to_json(settings);
    r["nodes"] = json::array();
    const auto n = static_cast<std::size_t>(solution.displacements.size()) / kDofsPerNode;
    for (std::size_t node = 0; node < n; ++node) {
        r["nodes"].push_back({{"id", node},
                              {"displacement", node_vectors(solution.displacements, node)},
                              {"reaction", node_vectors(solution.reactions, node)}});
    }
    return r;
}

StaticSolution static_from_report(const json& report) {
    try {
        check_report(report, "static");
        const json& nodes = require(report, "nodes", "report");
        StaticSolution s;
        const auto ndof = static_cast<Eigen::Index>(kDofsPerNode * nodes.size());
        s.displacements = Eigen::VectorXd::Zero(ndof);
        s.reactions = Eigen::VectorXd::Zero(ndof);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const std::string where = "nodes[" + std::to_string(i) + "]";
            const auto u = number_array<6>(require(nodes[i], "displacement", where), where);
            const auto f = number_array<6>(require(nodes[i], "reaction", where), where);
            for (int k = 0; k < kDofsPerNode; ++k) {
                s.displacements(static_cast<Eigen::Index>(kDofsPerNode * i + k)) = u[k];
                s.reactions(static_cast<Eigen::Index>(kDofsPerNode * i + k)) = f[k];
            }
        }
        return s;
    } catch (const json::exception& ex) {
        parse_fail(ex.what());
    }
}

json buckling_report(const BucklingSolution& solution, const SolverSettings& settings) {
    json r;
    r["schema_version"] = kReportSchemaVersion;
    r["analysis"] = "buckle";
    r["settings"] = settings_to_json(settings);
    r["lambda_cr"] = solution.lambda_cr;
    r["nodes"] = json::array();
    const auto n = static_cast<std::size_t>(solution.mode.size()) / kDofsPerNode;
    for (std::size_t node = 0; node < n; ++node) {
        r["nodes"].push_back({{"id", node}, {"mode", node_vectors(solution.mode, node)}});
    }
    return r;
}

BucklingSolution buckling_from_report(const json& report) {
    try {
        check_report(report, "buckle");
        BucklingSolution s;
        s.lambda_cr = number(require(report, "lambda_cr", "report"), "lambda_cr");
        const json& nodes = require(report, "nodes", "report");
        s.mode = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(kDofsPerNode * nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const std::string where = "nodes[" + std::to_string(i) + "]";
            const auto m = number_array<6>(require(nodes[i], "mode", where), where);
            for (int k = 0; k < kDofsPerNode; ++k) {
                s.mode(static_cast<Eigen::Index>(kDofsPerNode * i + k)) = m[k];
            }
        }
        return s;
    } catch (const json::exception& ex) {
        parse_fail(ex.what());
    }
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void write_static_csv(std::ostream& out, const StaticSolution& solution) {
    out << "node,ux,uy,uz,rx,ry,rz,Fx,Fy,Fz,Mx,My,Mz\n";
    const auto n = static_cast<std::size_t>(solution.displacements.size()) / kDofsPerNode;
    for (std::size_t node = 0; node < n; ++node) {
        out << node;
        for (const auto* v : {&solution.displacements, &solution.reactions}) {
            for (int k = 0; k < kDofsPerNode; ++k) {
                out << ',' << format_double((*v)(static_cast<Eigen::Index>(kDofsPerNode * node + k)));
            }
        }
        out << '\n';
    }
}

json mesh_to_json(const fem2d::Mesh2D& mesh) {
    json j;
    j["kind"] = std::string(fem2d::family_name(mesh.kind));
    j["coords"] = json::array();
    for (Eigen::Index i = 0; i < mesh.coords.rows(); ++i) {
        j["coords"].push_back({mesh.coords(i, 0), mesh.coords(i, 1)});
    }
    j["connectivity"] = json::array();
    for (Eigen::Index e = 0; e < mesh.connectivity.rows(); ++e) {
        json row = json::array();
        for (Eigen::Index k = 0; k < mesh.connectivity.cols(); ++k) {
            row.push_back(mesh.connectivity(e, k));
        }
        j["connectivity"].push_back(row);
    }
    return j;
}

json mesh_to_json(const fem1d::Mesh1D& mesh) {
    json j;
    j["kind"] = "line2";
    j["coords"] = mesh.node_coords;
    j["connectivity"] = json::array();
    for (const auto& [a, b] : mesh.connectivity) j["connectivity"].push_back({a, b});
    return j;
}

} // namespace structkit::io
