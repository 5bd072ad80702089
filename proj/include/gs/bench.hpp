#pragma once
#include <iosfwd>

#include "gs/config.hpp"

namespace gs {

/// Times the spectral and direct convolution paths and the per-step cost of
/// both model variants on square grids of side 16, 32 and 64, using the
/// config's physical parameters. Emits CSV rows "size,op,mean_ns,reps".
void run_bench(const SimConfig& cfg, std::ostream& out);

} // namespace gs
