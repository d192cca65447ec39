// Batch front end: dispatches the CLI commands and writes the CSV artifacts.
// Kept as a library so tests can drive commands without spawning processes.
#pragma once

#include <string>
#include <vector>

#include "vvlab/analysis.hpp"
#include "vvlab/config.hpp"

namespace vvlab {

// Exit-status contract: 0 pass, 1 check failure, 2 usage/config error,
// 3 numerical abort.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitConfigError = 2,
    kExitNumericAbort = 3,
};

struct RunOptions {
    std::string command;     // solve | sweep-eps | verify | alpha-range | mms
    std::string config_path;
    std::string out_dir = "out";
    double tol_grad = 0.05;
    bool no_eps_lift = false; // verify lifts u0 by eps unless this is set
};

int run_command(const RunOptions& opts);

struct MmsRow {
    std::string case_name;
    int n = 0;
    double error = 0.0;
    double order = 0.0; // nan on the first row of a case
};

// Manufactured-solution convergence study: affine exact, uniform ODE,
// quadratic ODE-reference.
std::vector<MmsRow> mms_study(double cfl_safety);

// Reference for the quadratic manufactured case: RK4 on
// B' = (2N - 4 gamma) B^2, A' = 2N A B with step dt_ref.
std::pair<double, double> quadratic_ode_reference(double A0, double B0, int dim,
                                                  double gamma, double t_end,
                                                  double dt_ref);

} // namespace vvlab
