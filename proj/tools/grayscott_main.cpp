// Command-line front end: run / check / bench / sweep.
//
// Exit codes: 0 clean, 1 self-check failure, 2 invariant violation,
// 3 divergence, 64 usage or configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gs/bench.hpp"
#include "gs/config.hpp"
#include "gs/runner.hpp"
#include "gs/selfcheck.hpp"
#include "gs/sweep.hpp"

namespace {

constexpr int kExitUsage = 64;

gs::SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gs::IoError("cannot read config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return gs::parse_config(text.str());
}

int do_run(const std::string& config_path) {
    const gs::SimConfig cfg = load_config(config_path);
    const gs::RunResult result = gs::run(cfg);
    std::cout << "stability: " << result.stability.summary() << '\n';
    if (result.stability_refused) {
        std::cerr << "refusing to run: time step fails the stability screen; "
                     "set waive_stability = true to proceed anyway\n";
        return kExitUsage;
    }
    std::cout << "finished at step " << result.final_state.step << " (t = "
              << result.final_state.time << "), " << result.reports.size()
              << " audit rows in " << cfg.output_dir << "/invariants.csv\n";
    if (result.diverged) {
        std::cerr << "divergence detected at step " << result.divergence_step << '\n';
        return 3;
    }
    if (result.hard_violations > 0) {
        std::cerr << result.hard_violations << " audit(s) reported invariant violations\n";
        return 2;
    }
    return 0;
}

int do_sweep(const std::string& config_path, const std::vector<std::string>& param_specs) {
    const gs::SimConfig base = load_config(config_path);
    std::vector<gs::SweepParam> params;
    params.reserve(param_specs.size());
    for (const auto& spec : param_specs) {
        params.push_back(gs::parse_sweep_param(spec));
    }
    gs::run_sweep(base, params, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray-Scott reaction-diffusion simulator with local and "
                 "nonlocal (convolution) diffusion"};
    app.require_subcommand(1);

    std::string run_config;
    auto* cmd_run = app.add_subcommand("run", "simulate a config file");
    cmd_run->add_option("config", run_config, "path to key = value config")->required();

    auto* cmd_check = app.add_subcommand(
        "check", "run the built-in property/oracle suite at small grid sizes");

    std::string bench_config;
    auto* cmd_bench = app.add_subcommand(
        "bench", "time spectral vs direct convolution and per-step costs");
    cmd_bench->add_option("config", bench_config, "path to config")->required();

    std::string sweep_config;
    std::vector<std::string> sweep_params;
    auto* cmd_sweep = app.add_subcommand("sweep", "grid of runs over parameter ranges");
    cmd_sweep->add_option("config", sweep_config, "path to base config")->required();
    cmd_sweep->add_option("--param", sweep_params,
                          "axis as name=first:last:count (repeatable)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (cmd_run->parsed()) return do_run(run_config);
        if (cmd_check->parsed()) return gs::run_self_checks(std::cout) == 0 ? 0 : 1;
        if (cmd_bench->parsed()) {
            gs::run_bench(load_config(bench_config), std::cout);
            return 0;
        }
        if (cmd_sweep->parsed()) return do_sweep(sweep_config, sweep_params);
    } catch (const gs::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const gs::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
