#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "structkit/cli.hpp"

namespace {

std::optional<Eigen::Vector3d> to_vec3(const std::vector<double>& v) {
    if (v.empty()) return std::nullopt;
    return Eigen::Vector3d(v[0], v[1], v[2]);
}

} // namespace

int main(int argc, char** argv) {
    using structkit::cli::RunConfig;

    CLI::App app{"structkit: frame analysis and finite-element kernels"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format = "json";
    double condition_limit = 0.0;
    double eig_floor = 0.0;

    auto* cond_opt = app.add_option("--condition-limit", condition_limit,
                                    "Reject reduced systems at or above this condition number");
    auto* floor_opt = app.add_option("--eig-floor", eig_floor,
                                     "Ignore buckling eigenvalues at or below this value");
    app.add_option("--out", config.output_path, "Output file ('-' for stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* st = app.add_subcommand("static", "Linear static analysis of a frame model");
    auto* bk = app.add_subcommand("buckle", "Elastic critical-load analysis of a frame model");
    for (auto* sub : {st, bk}) {
        sub->add_option("--model", config.model_path, "Model JSON file")->required();
    }

    auto& m = config.mesh;
    auto* m2 = app.add_subcommand("mesh2d", "Structured Tri6/Quad8 mesh of a rectangle");
    m2->add_option("--kind", m.kind)->check(CLI::IsMember({"tri6", "quad8"}));
    m2->add_option("--x-lo", m.x_lo);
    m2->add_option("--y-lo", m.y_lo);
    m2->add_option("--x-hi", m.x_hi);
    m2->add_option("--y-hi", m.y_hi);
    m2->add_option("--nx", m.nx);
    m2->add_option("--ny", m.ny);

    auto* m1 = app.add_subcommand("mesh1d", "Uniform 1D mesh");
    m1->add_option("--x-min", m.x_min);
    m1->add_option("--x-max", m.x_max);
    m1->add_option("--n", m.num_elements, "Number of elements");

    auto& el = config.element;
    double i_rho = 0.0;
    std::vector<double> p_i, p_j, local_z, u;
    auto* ec = app.add_subcommand("element", "Print an element matrix or end-force vector");
    ec->add_option("--kind", el.kind)
        ->check(CLI::IsMember({"elastic", "geometric", "transform", "loads"}));
    ec->add_option("--E", el.section.E);
    ec->add_option("--nu", el.section.nu);
    ec->add_option("--A", el.section.A);
    ec->add_option("--Iy", el.section.Iy);
    ec->add_option("--Iz", el.section.Iz);
    ec->add_option("--J", el.section.J);
    auto* irho_opt = ec->add_option("--I-rho", i_rho);
    ec->add_option("--L", el.L);
    ec->add_option("--Fx2", el.forces.Fx2);
    ec->add_option("--Mx2", el.forces.Mx2);
    ec->add_option("--My1", el.forces.My1);
    ec->add_option("--Mz1", el.forces.Mz1);
    ec->add_option("--My2", el.forces.My2);
    ec->add_option("--Mz2", el.forces.Mz2);
    ec->add_option("--pi", p_i)->expected(3)->delimiter(',');
    ec->add_option("--pj", p_j)->expected(3)->delimiter(',');
    ec->add_option("--local-z", local_z)->expected(3)->delimiter(',');
    ec->add_option("--u", u, "12 global element displacements")->expected(12)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return structkit::cli::kParseFailure;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = format;
    if (*cond_opt) config.condition_limit = condition_limit;
    if (*floor_opt) config.eig_floor = eig_floor;
    if (*irho_opt) el.section.I_rho = i_rho;
    if (auto v = to_vec3(p_i)) el.p_i = *v;
    if (auto v = to_vec3(p_j)) el.p_j = *v;
    el.local_z = to_vec3(local_z);
    if (!u.empty()) el.u_global = Eigen::Map<const structkit::Vector12>(u.data());

    return structkit::cli::run(config, std::cout, std::cerr);
}
