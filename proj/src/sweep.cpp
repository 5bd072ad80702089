#include "gs/sweep.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gs/runner.hpp"

namespace gs {

namespace {

void set_swept_value(SimConfig& cfg, const std::string& name, double value) {
    if (name == "f") cfg.params.f = value;
    else if (name == "kappa") cfg.params.kappa = value;
    else if (name == "d_u") cfg.params.d_u = value;
    else if (name == "d_v") cfg.params.d_v = value;
    else if (name == "dt") cfg.params.dt = value;
    else if (name == "epsilon") cfg.epsilon = value;
    else if (name == "t_end") cfg.t_end = value;
    else if (name == "u_in") cfg.seed.u_in = value;
    else if (name == "v_in") cfg.seed.v_in = value;
    else if (name == "noise_amplitude") cfg.seed.noise_amplitude = value;
    else {
        throw ConfigError("sweep: parameter '" + name +
                          "' is not sweepable (numeric model/seed keys only)");
    }
}

std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

int status_code(const RunResult& r) {
    if (r.stability_refused) return 64;
    if (r.diverged) return 3;
    if (r.hard_violations > 0) return 2;
    return 0;
}

} // namespace

SweepParam parse_sweep_param(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("sweep: expected name=first:last:count, got '" + spec + "'");
    }
    SweepParam p;
    p.name = spec.substr(0, eq);
    const std::string range = spec.substr(eq + 1);
    double first = 0.0, last = 0.0;
    long count = 0;
    char trailing = '\0';
    const int got = std::sscanf(range.c_str(), "%lf:%lf:%ld%c", &first, &last,
                                &count, &trailing);
    if (got != 3 || count < 1) {
        throw ConfigError("sweep: bad range '" + range +
                          "' for parameter '" + p.name + "' (want first:last:count)");
    }
    p.values.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0
                                    : static_cast<double>(i) /
                                          static_cast<double>(count - 1);
        p.values.push_back(first + (last - first) * t);
    }
    return p;
}

void run_sweep(const SimConfig& base, const std::vector<SweepParam>& params,
               std::ostream& log) {
    if (params.empty()) throw ConfigError("sweep: need at least one --param");
    std::size_t cells = 1;
    for (const auto& p : params) cells *= p.values.size();

    const std::filesystem::path root(base.output_dir);
    std::filesystem::create_directories(root);
    std::ofstream manifest(root / "manifest.csv", std::ios::trunc);
    if (!manifest) throw IoError("cannot open manifest in " + base.output_dir);

    std::string header = "cell,directory";
    for (const auto& p : params) header += "," + p.name;
    header += ",status";
    manifest << header << '\n';
    log << header << '\n';

    std::vector<std::size_t> index(params.size(), 0);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        SimConfig cfg = base;
        std::string dir_name = "cell_";
        {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%04zu", cell);
            dir_name += buf;
        }
        std::string value_cols;
        for (std::size_t k = 0; k < params.size(); ++k) {
            const double value = params[k].values[index[k]];
            set_swept_value(cfg, params[k].name, value);
            dir_name += "_" + params[k].name + "_" + short_num(value);
            value_cols += "," + short_num(value);
        }
        cfg.output_dir = (root / dir_name).string();
        const RunResult r = run(cfg);
        const std::string row =
            std::to_string(cell) + "," + dir_name + value_cols + "," +
            std::to_string(status_code(r));
        manifest << row << '\n';
        log << row << '\n';

        for (std::size_t k = params.size(); k-- > 0;) {
            if (++index[k] < params[k].values.size()) break;
            index[k] = 0;
        }
    }
}

} // namespace gs
