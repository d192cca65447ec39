#include "vvlab/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vvlab/config.hpp"

namespace vvlab {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    return out;
}

std::string snap_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snap_%04zu.field.csv", k);
    return buf;
}

} // namespace

void write_field_csv(const ScalarField& u, const std::string& path) {
    std::ofstream out = open_out(path);
    const Grid& g = *u.grid;
    out << g.dim() << "," << g.points() << "," << format_double(g.extent()) << ","
        << to_string(g.boundary()) << "\n";
    for (double x : u.v) out << format_double(x) << "\n";
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

ScalarField read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open field file '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw ConfigError("empty field file '" + path + "'");
    std::stringstream hs(header);
    std::string dim_s, n_s, L_s, b_s;
    if (!std::getline(hs, dim_s, ',') || !std::getline(hs, n_s, ',') ||
        !std::getline(hs, L_s, ',') || !std::getline(hs, b_s))
        throw ConfigError("bad field header in '" + path + "'");
    GridSpec spec;
    spec.dim = std::stoi(dim_s);
    spec.points = std::stoi(n_s);
    spec.extent = std::stod(L_s);
    spec.boundary = boundary_from_string(b_s);
    ScalarField f(build_grid(spec));
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (i >= f.v.size()) throw ConfigError("too many values in '" + path + "'");
        f.v[i++] = std::stod(line);
    }
    if (i != f.v.size())
        throw ConfigError("value count mismatch in '" + path + "': got " +
                          std::to_string(i) + ", expected " + std::to_string(f.v.size()));
    if (!f.all_finite()) throw ConfigError("non-finite value in '" + path + "'");
    return f;
}

void write_trajectory(const Trajectory& traj, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream manifest = open_out(dir + "/manifest.csv");
    manifest << "index,t,filename,min_u,max_u\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const std::string name = snap_name(k);
        write_field_csv(traj.fields[k], dir + "/" + name);
        manifest << k << "," << format_double(traj.times[k]) << "," << name << ","
                 << format_double(traj.fields[k].min_value()) << ","
                 << format_double(traj.fields[k].max_value()) << "\n";
    }
}

void write_convergence_table(const ConvergenceTable& table, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "eps,diff_inf,diff_l1,order\n";
    for (const auto& r : table.rows)
        out << format_double(r.eps) << "," << format_double(r.diff_inf) << ","
            << format_double(r.diff_l1) << "," << format_double(r.order) << "\n";
}

void write_report_csv(const RegularityReport& rep, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "eps," << format_double(rep.epsilon) << "\n";
    out << "M," << format_double(rep.M) << "\n";
    out << "sup_grad_power," << format_double(rep.sup_grad_power) << "\n";
    out << "lipschitz_x," << format_double(rep.lipschitz_x_max) << "\n";
    out << "lipschitz_bound," << format_double(rep.lipschitz_bound) << "\n";
    out << "holder_K," << format_double(rep.holder_K) << "\n";
    out << "holder_exponent,"
        << (rep.holder_flat ? std::string("flat") : format_double(rep.holder_exponent))
        << "\n";
    out << "holder_delta," << format_double(rep.holder_delta) << "\n";
    for (const auto& w : rep.weak_residuals) {
        out << "weak_residual_derived." << w.id << "," << format_double(w.residual_derived)
            << "\n";
        out << "weak_residual_paper." << w.id << "," << format_double(w.residual_paper)
            << "\n";
        out << "weak_residual_scale." << w.id << "," << format_double(w.scale) << "\n";
    }
    out << "eq18_max_violation," << format_double(rep.eq18_max_violation) << "\n";
    out << "eq21_max_violation," << format_double(rep.eq21_max_violation) << "\n";
    out << "z_sup_initial," << format_double(rep.z_sup_initial) << "\n";
    out << "z_sup_overall," << format_double(rep.z_sup_overall) << "\n";
    out << "boundary_activity," << format_double(rep.boundary_activity) << "\n";
    for (const auto& c : rep.checks)
        out << c.name << "," << (c.pass ? "pass" : "fail") << ","
            << format_double(c.tolerance) << "\n";
}

void write_witness_csv(const RegularityReport& rep, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "check,t,node,x,y,value\n";
    for (const auto& w : rep.witnesses)
        out << w.check << "," << format_double(w.t) << "," << w.node << ","
            << format_double(w.x) << "," << format_double(w.y) << ","
            << format_double(w.value) << "\n";
}

void emit_plot_data(const Trajectory& traj, const std::string& dir) {
    if (traj.size() == 0) throw ConfigError("emit_plot_data: empty trajectory");
    std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "profile_t%zu.csv", k);
        std::ofstream out = open_out(dir + "/" + name);
        const Grid& g = *traj.fields[k].grid;
        if (g.dim() == 1) {
            out << "x,u\n";
            for (int i = 0; i < g.points(); ++i)
                out << format_double(g.coord(i)) << ","
                    << format_double(traj.fields[k].v[i]) << "\n";
        } else {
            out << "x,y,u\n";
            for (int i = 0; i < g.points(); ++i)
                for (int j = 0; j < g.points(); ++j)
                    out << format_double(g.coord(i)) << "," << format_double(g.coord(j))
                        << "," << format_double(traj.fields[k].v[g.index(i, j)]) << "\n";
        }
    }
}

} // namespace vvlab
