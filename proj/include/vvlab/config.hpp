// Experiment definition and the flat key = value config grammar.
#pragma once

#include <string>
#include <vector>

#include "vvlab/alpha.hpp"
#include "vvlab/forcing.hpp"
#include "vvlab/grid.hpp"
#include "vvlab/initial_data.hpp"

namespace vvlab {

struct EpsSchedule {
    double eps0 = 0.05;
    double factor = 0.5;
    int count = 1;

    bool operator==(const EpsSchedule&) const = default;
};

struct ProblemConfig {
    GridSpec grid;
    double gamma = 1.0;
    Forcing forcing;
    InitialData initial;
    double alpha = -1.0;   // resolved value; "auto" is resolved at parse time
    double horizon = 0.1;  // T
    EpsSchedule eps;
    double cfl_safety = 0.4;
    std::vector<double> snapshots; // strictly increasing, first 0, last T
};

bool operator==(const GridSpec&, const GridSpec&);
bool operator==(const Forcing&, const Forcing&);
bool operator==(const InitialData&, const InitialData&);
bool operator==(const ProblemConfig&, const ProblemConfig&);

// Parses the flat grammar (one `key = value` per line, `#` comments).
// Unknown keys are errors naming the line. `alpha = auto` resolves to the
// admissible-interval midpoint (nudged off -2). Basic type/range validation
// only; certification hypotheses are gated separately.
ProblemConfig parse_config_text(const std::string& text);
ProblemConfig load_config_file(const std::string& path);

// Hypothesis gate for certification commands. Throws ConfigError naming the
// offending key and the violated hypothesis.
void validate_for_certification(const ProblemConfig& cfg);

// Canonical serialization; parse_config_text(render_config(c)) == c.
std::string render_config(const ProblemConfig& cfg);

// 17-significant-digit decimal text (round-trips doubles exactly).
std::string format_double(double x);

} // namespace vvlab
