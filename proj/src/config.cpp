#include "vvlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace vvlab {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0; // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || !std::isfinite(x))
        throw ConfigError("key '" + key + "': expected a finite real, got '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

const char* kKnownKeys[] = {
    "dim",          "L",           "n",          "boundary",  "gamma",
    "forcing.kind", "forcing.k",   "forcing.m",  "initial.kind",
    "initial.c",    "initial.a",   "initial.A",  "initial.sigma",
    "initial.x0",   "initial.a0",  "initial.b",  "initial.A0", "initial.B0",
    "alpha",        "T",           "eps0",       "eps_factor", "eps_count",
    "cfl_safety",   "snapshots"};

bool known_key(const std::string& k) {
    for (const char* s : kKnownKeys)
        if (k == s) return true;
    return false;
}

} // namespace

ProblemConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!known_key(key))
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        if (kv.count(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        kv[key] = val;
    }

    auto require = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError(std::string("missing required key '") + key + "'");
        return it->second;
    };
    auto get = [&](const char* key, const std::string& dflt) {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    };
    auto has = [&](const char* key) { return kv.count(key) != 0; };

    ProblemConfig cfg;
    cfg.grid.dim = parse_int("dim", require("dim"));
    cfg.grid.extent = parse_double("L", require("L"));
    cfg.grid.points = parse_int("n", require("n"));
    cfg.grid.boundary = boundary_from_string(get("boundary", "periodic"));
    build_grid(cfg.grid); // validates dim/L/n

    cfg.gamma = parse_double("gamma", require("gamma"));
    if (cfg.gamma < 0.0) throw ConfigError("key 'gamma': must be >= 0");

    cfg.forcing.kind = forcing_kind_from_string(require("forcing.kind"));
    if (cfg.forcing.kind == ForcingKind::TimeProfile) {
        cfg.forcing.profile = parse_list("forcing.k", get("forcing.k", "0"));
        cfg.forcing.k = 0.0;
    } else {
        cfg.forcing.k = parse_double("forcing.k", get("forcing.k", "0"));
    }
    cfg.forcing.growth_m = parse_double("forcing.m", get("forcing.m", "0"));

    cfg.initial.kind = initial_kind_from_string(require("initial.kind"));
    // Catalog defaults; any provided key overrides.
    switch (cfg.initial.kind) {
        case InitialKind::Uniform: cfg.initial.c = 1.0; break;
        case InitialKind::Cosine: cfg.initial.c = 2.0; cfg.initial.a = 0.5; break;
        case InitialKind::Gaussian:
            cfg.initial.c = 0.5;
            cfg.initial.A = 1.0;
            cfg.initial.sigma = 0.1;
            cfg.initial.x0 = {0.5 * cfg.grid.extent, 0.5 * cfg.grid.extent};
            break;
        case InitialKind::Linear: cfg.initial.a0 = 1.0; cfg.initial.b = 1.0; break;
        case InitialKind::Quadratic: cfg.initial.A0 = 1.0; cfg.initial.B0 = 0.1; break;
    }
    if (has("initial.c")) cfg.initial.c = parse_double("initial.c", kv["initial.c"]);
    if (has("initial.a")) cfg.initial.a = parse_double("initial.a", kv["initial.a"]);
    if (has("initial.A")) cfg.initial.A = parse_double("initial.A", kv["initial.A"]);
    if (has("initial.sigma"))
        cfg.initial.sigma = parse_double("initial.sigma", kv["initial.sigma"]);
    if (has("initial.x0")) {
        const auto xs = parse_list("initial.x0", kv["initial.x0"]);
        if (static_cast<int>(xs.size()) != 1 && static_cast<int>(xs.size()) != cfg.grid.dim)
            throw ConfigError("key 'initial.x0': expected 1 or dim entries");
        cfg.initial.x0[0] = xs[0];
        cfg.initial.x0[1] = xs.size() > 1 ? xs[1] : xs[0];
    }
    if (has("initial.a0")) cfg.initial.a0 = parse_double("initial.a0", kv["initial.a0"]);
    if (has("initial.b")) cfg.initial.b = parse_double("initial.b", kv["initial.b"]);
    if (has("initial.A0")) cfg.initial.A0 = parse_double("initial.A0", kv["initial.A0"]);
    if (has("initial.B0")) cfg.initial.B0 = parse_double("initial.B0", kv["initial.B0"]);

    cfg.horizon = parse_double("T", require("T"));
    if (!(cfg.horizon > 0.0)) throw ConfigError("key 'T': must be > 0");

    const std::string alpha_s = require("alpha");
    if (alpha_s == "auto") {
        const AlphaInterval iv = admissible_alpha_interval(cfg.gamma, cfg.grid.dim);
        if (iv.empty())
            throw ConfigError(
                "key 'alpha': auto requested but no admissible exponent exists for "
                "gamma = " + format_double(cfg.gamma) + ", N = " +
                std::to_string(cfg.grid.dim) + "; requires gamma >= sqrt(2N)-1 = " +
                format_double(std::sqrt(2.0 * cfg.grid.dim) - 1.0));
        cfg.alpha = auto_alpha(iv);
    } else {
        cfg.alpha = parse_double("alpha", alpha_s);
    }

    cfg.eps.eps0 = parse_double("eps0", require("eps0"));
    cfg.eps.factor = parse_double("eps_factor", require("eps_factor"));
    cfg.eps.count = parse_int("eps_count", require("eps_count"));
    if (!(cfg.eps.eps0 > 0.0)) throw ConfigError("key 'eps0': must be > 0");
    if (!(cfg.eps.factor > 0.0 && cfg.eps.factor < 1.0))
        throw ConfigError("key 'eps_factor': must lie in (0,1)");
    if (cfg.eps.count < 1) throw ConfigError("key 'eps_count': must be >= 1");

    cfg.cfl_safety = parse_double("cfl_safety", get("cfl_safety", "0.4"));
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
        throw ConfigError("key 'cfl_safety': must lie in (0,1]");

    if (has("snapshots")) {
        cfg.snapshots = parse_list("snapshots", kv["snapshots"]);
        for (std::size_t i = 0; i < cfg.snapshots.size(); ++i) {
            const double t = cfg.snapshots[i];
            if (t < 0.0 || t > cfg.horizon)
                throw ConfigError("key 'snapshots': entry outside [0,T]");
            if (i > 0 && t <= cfg.snapshots[i - 1])
                throw ConfigError("key 'snapshots': must be strictly increasing");
        }
    } else {
        cfg.snapshots.resize(33);
        for (int i = 0; i < 33; ++i) cfg.snapshots[i] = cfg.horizon * i / 32.0;
    }
    // Trajectories always start at 0 and end at T.
    if (cfg.snapshots.front() != 0.0) cfg.snapshots.insert(cfg.snapshots.begin(), 0.0);
    if (cfg.snapshots.back() != cfg.horizon) cfg.snapshots.push_back(cfg.horizon);

    return cfg;
}

ProblemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate_for_certification(const ProblemConfig& cfg) {
    const int N = cfg.grid.dim;
    const double gmin = std::sqrt(2.0 * N) - 1.0;
    if (cfg.gamma < gmin)
        throw ConfigError("key 'gamma': " + format_double(cfg.gamma) +
                          " is below sqrt(2N)-1 = " + format_double(gmin) +
                          "; the gradient-bound hypothesis gamma >= sqrt(2N)-1 fails");
    const AlphaInterval iv = admissible_alpha_interval(cfg.gamma, N);
    const double slack = 1e-12 * (1.0 + (cfg.gamma + 1.0) * (cfg.gamma + 1.0));
    if (iv.empty() || cfg.alpha < iv.lo - slack || cfg.alpha > iv.hi + slack)
        throw ConfigError(
            "key 'alpha': " + format_double(cfg.alpha) +
            " violates the admissibility condition alpha^2 + (gamma+1)alpha + N/2 <= 0 "
            "(admissible set " + iv.describe() + ")");
    if (std::fabs(cfg.alpha + 2.0) < 1e-9)
        throw ConfigError("key 'alpha': the Lipschitz/Hoelder estimates require alpha != -2");

    const double kg = cfg.forcing.growth_kg(cfg.horizon);
    const double u0max =
        sample_initial(cfg.initial, build_grid(cfg.grid)).max_value();
    const double u_cap = 1.5 * (u0max + cfg.eps.eps0) +
                         cfg.horizon * kg * std::pow(1.0 + u0max, cfg.forcing.growth_m);
    const ForcingValidation fv = validate_forcing(cfg.forcing, cfg.horizon, u_cap);
    if (!fv.pass)
        throw ConfigError("key 'forcing.kind': hypothesis check failed: " + fv.message());
}

std::string render_config(const ProblemConfig& cfg) {
    std::ostringstream os;
    os << "dim = " << cfg.grid.dim << "\n";
    os << "L = " << format_double(cfg.grid.extent) << "\n";
    os << "n = " << cfg.grid.points << "\n";
    os << "boundary = " << to_string(cfg.grid.boundary) << "\n";
    os << "gamma = " << format_double(cfg.gamma) << "\n";
    os << "forcing.kind = " << to_string(cfg.forcing.kind) << "\n";
    if (cfg.forcing.kind == ForcingKind::TimeProfile) {
        os << "forcing.k = ";
        for (std::size_t i = 0; i < cfg.forcing.profile.size(); ++i)
            os << (i ? "," : "") << format_double(cfg.forcing.profile[i]);
        os << "\n";
    } else {
        os << "forcing.k = " << format_double(cfg.forcing.k) << "\n";
    }
    os << "forcing.m = " << format_double(cfg.forcing.growth_m) << "\n";
    os << "initial.kind = " << to_string(cfg.initial.kind) << "\n";
    os << "initial.c = " << format_double(cfg.initial.c) << "\n";
    os << "initial.a = " << format_double(cfg.initial.a) << "\n";
    os << "initial.A = " << format_double(cfg.initial.A) << "\n";
    os << "initial.sigma = " << format_double(cfg.initial.sigma) << "\n";
    os << "initial.x0 = " << format_double(cfg.initial.x0[0]);
    if (cfg.grid.dim == 2) os << "," << format_double(cfg.initial.x0[1]);
    os << "\n";
    os << "initial.a0 = " << format_double(cfg.initial.a0) << "\n";
    os << "initial.b = " << format_double(cfg.initial.b) << "\n";
    os << "initial.A0 = " << format_double(cfg.initial.A0) << "\n";
    os << "initial.B0 = " << format_double(cfg.initial.B0) << "\n";
    os << "alpha = " << format_double(cfg.alpha) << "\n";
    os << "T = " << format_double(cfg.horizon) << "\n";
    os << "eps0 = " << format_double(cfg.eps.eps0) << "\n";
    os << "eps_factor = " << format_double(cfg.eps.factor) << "\n";
    os << "eps_count = " << cfg.eps.count << "\n";
    os << "cfl_safety = " << format_double(cfg.cfl_safety) << "\n";
    os << "snapshots = ";
    for (std::size_t i = 0; i < cfg.snapshots.size(); ++i)
        os << (i ? "," : "") << format_double(cfg.snapshots[i]);
    os << "\n";
    return os.str();
}

bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.dim == b.dim && a.extent == b.extent && a.points == b.points &&
           a.boundary == b.boundary;
}
bool operator==(const Forcing& a, const Forcing& b) {
    return a.kind == b.kind && a.k == b.k && a.profile == b.profile &&
           a.growth_m == b.growth_m;
}
bool operator==(const InitialData& a, const InitialData& b) {
    return a.kind == b.kind && a.c == b.c && a.a == b.a && a.A == b.A &&
           a.sigma == b.sigma && a.x0 == b.x0 && a.a0 == b.a0 && a.b == b.b &&
           a.A0 == b.A0 && a.B0 == b.B0;
}
bool operator==(const ProblemConfig& a, const ProblemConfig& b) {
    return a.grid == b.grid && a.gamma == b.gamma && a.forcing == b.forcing &&
           a.initial == b.initial && a.alpha == b.alpha && a.horizon == b.horizon &&
           a.eps == b.eps && a.cfl_safety == b.cfl_safety && a.snapshots == b.snapshots;
}

} // namespace vvlab
