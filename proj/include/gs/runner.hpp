#pragma once
#include <vector>

#include "gs/config.hpp"
#include "gs/monitors.hpp"

namespace gs {

struct RunResult {
    SimState final_state;
    std::vector<InvariantReport> reports;
    StabilityReport stability;
    bool stability_refused = false; // failed the gate and no waiver was given
    bool diverged = false;
    std::uint64_t divergence_step = 0;
    int hard_violations = 0; // reports containing at least one hard violation
};

/// End-to-end driver: seeds, screens stability, advances round(t_end/dt)
/// steps, audits on the report cadence (always at step 0 and at the end),
/// and writes invariants.csv, snapshots, and optional PGM images under
/// cfg.output_dir. Deterministic for a fixed config: two runs give
/// byte-identical files. Divergence aborts the loop, flushes what exists,
/// and appends a failure record to the invariant log.
RunResult run(const SimConfig& cfg);

} // namespace gs
