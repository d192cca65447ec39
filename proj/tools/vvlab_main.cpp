// vvlab command-line front end.
#include <CLI11.hpp>

#include "vvlab/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "vvlab: vanishing-viscosity solver and regularity certification for\n"
        "u_t = u lap u - gamma |grad u|^2 + f(t,u)"};
    app.require_subcommand(1);

    vvlab::RunOptions opts;
    const char* commands[] = {"solve", "sweep-eps", "verify", "alpha-range", "mms"};
    const char* descriptions[] = {
        "solve at the smallest eps of the schedule and dump the trajectory",
        "run the eps ladder and write eps_convergence.csv",
        "sweep eps, then certify the limit trajectory (report.csv, witness.csv)",
        "print the admissible alpha interval for (gamma, dim)",
        "manufactured-solution convergence study (mms.csv)"};
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--config", opts.config_path, "experiment config file")
            ->required();
        sub->add_option("--out", opts.out_dir, "output directory (default: out)");
        sub->add_option("--tol-grad", opts.tol_grad,
                        "relative tolerance for the gradient-bound checks");
        sub->add_flag("--no-eps-lift", opts.no_eps_lift,
                      "start from u0 instead of the lifted u0 + eps");
        sub->callback([&opts, i, &commands] { opts.command = commands[i]; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : vvlab::kExitConfigError;
    }
    return vvlab::run_command(opts);
}
