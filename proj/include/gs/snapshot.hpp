#pragma once
#include <filesystem>

#include "gs/integrator.hpp"

namespace gs {

/// On-disk state record, little-endian regardless of host:
///   "GSF1" | nx u32 | ny u32 | step u64 | dt f64 | u row-major f64 | v f64
/// Total length is exactly 28 + 16*nx*ny bytes. Round-trips are bit-exact.
struct LoadedSnapshot {
    SimState state;
    double dt = 0.0;
};

void write_snapshot(const SimState& s, double dt, const std::filesystem::path& path);
LoadedSnapshot read_snapshot(const std::filesystem::path& path);

} // namespace gs
