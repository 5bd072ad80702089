#include "gs/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "gs/image.hpp"
#include "gs/snapshot.hpp"

namespace gs {

namespace {

std::string step_tag(std::uint64_t step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(step));
    return buf;
}

void emit_snapshot(const SimState& s, const SimConfig& cfg,
                   const std::filesystem::path& dir) {
    write_snapshot(s, cfg.params.dt, dir / ("snapshot_" + step_tag(s.step) + ".gsf"));
    if (cfg.emit_images) {
        // u is bounded by 1 from (1,0)-type seeds; v stays well below 0.5.
        export_image(s.u, dir / ("u_" + step_tag(s.step) + ".pgm"), 0.0, 1.0);
        export_image(s.v, dir / ("v_" + step_tag(s.step) + ".pgm"), 0.0, 0.5);
    }
}

} // namespace

RunResult run(const SimConfig& cfg) {
    validate_params(cfg.params);
    RunResult result;

    std::optional<DiscreteKernel> kernel;
    if (cfg.variant == ModelVariant::mixed) {
        kernel.emplace(build_gaussian_kernel(kernel_spec(cfg)));
    }
    const DiscreteKernel* kptr = kernel ? &*kernel : nullptr;

    SimState state = seed(cfg.seed, cfg.lattice);
    result.stability = stability_check(cfg.params, cfg.variant, kptr, &state);
    if (!result.stability.pass && !cfg.waive_stability) {
        result.stability_refused = true;
        result.final_state = std::move(state);
        return result;
    }

    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir / "invariants.csv", std::ios::trunc);
    if (!csv) throw IoError("cannot open invariant log in " + cfg.output_dir);
    write_report_header(csv);

    const Bounds bounds = compute_bounds(state.u, state.v, cfg.params, cfg.lattice);
    const auto n_steps =
        static_cast<std::uint64_t>(std::llround(cfg.t_end / cfg.params.dt));

    auto record = [&](const SimState& s, bool diverged_here) {
        InvariantReport r = audit(s, bounds, cfg.params, cfg.lattice, cfg.variant, kptr);
        if (diverged_here) r.violations.push_back("divergence");
        if (has_hard_violation(r)) ++result.hard_violations;
        write_report_row(r, csv);
        result.reports.push_back(std::move(r));
    };

    record(state, false);
    constexpr std::uint64_t kNoSnapshot = ~std::uint64_t{0};
    std::uint64_t last_snapshot = kNoSnapshot;

    try {
        for (std::uint64_t step = 1; step <= n_steps; ++step) {
            state = (cfg.variant == ModelVariant::local)
                        ? step_local(state, cfg.params)
                        : step_mixed(state, cfg.params, *kernel);
            const bool report_due = (step % static_cast<std::uint64_t>(
                                                cfg.report_every) == 0) ||
                                    step == n_steps;
            if (report_due) record(state, false);
            const bool snapshot_due =
                (cfg.snapshot_every > 0 &&
                 step % static_cast<std::uint64_t>(cfg.snapshot_every) == 0) ||
                step == n_steps;
            if (snapshot_due) {
                emit_snapshot(state, cfg, dir);
                last_snapshot = step;
            }
        }
        if (n_steps == 0) {
            emit_snapshot(state, cfg, dir);
        }
    } catch (const DivergenceError& err) {
        // The failing state never materialized; log the last good one with a
        // divergence marker carrying its own step/time.
        result.diverged = true;
        result.divergence_step = err.step;
        record(state, true);
        if (state.step != last_snapshot) emit_snapshot(state, cfg, dir);
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace gs
