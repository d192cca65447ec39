// CSV artifacts: .field.csv serialization, trajectory dumps, convergence
// tables, regularity reports, and plot-ready profiles. All decimal text is
// written with 17 significant digits so doubles round-trip exactly.
#pragma once

#include <string>

#include "vvlab/analysis.hpp"
#include "vvlab/grid.hpp"
#include "vvlab/solver.hpp"

namespace vvlab {

// Header line `dim,n,L,boundary`, then one value per line, row-major.
void write_field_csv(const ScalarField& u, const std::string& path);
ScalarField read_field_csv(const std::string& path);

// One .field.csv per snapshot plus manifest.csv
// (rows: snapshot index, t, filename, min u, max u).
void write_trajectory(const Trajectory& traj, const std::string& dir);

// eps_convergence.csv with header eps,diff_inf,diff_l1,order.
void write_convergence_table(const ConvergenceTable& table, const std::string& path);

// report.csv: one key,value row per scalar entry plus check,pass,tolerance
// rows; witness.csv lists worst-violation node coordinates per check.
void write_report_csv(const RegularityReport& rep, const std::string& path);
void write_witness_csv(const RegularityReport& rep, const std::string& path);

// profile_t<k>.csv per snapshot: columns x[,y],u.
void emit_plot_data(const Trajectory& traj, const std::string& dir);

} // namespace vvlab
