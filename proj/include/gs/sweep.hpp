#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "gs/config.hpp"

namespace gs {

/// One swept axis: values linearly spaced from first to last (inclusive).
/// Parsed from "name=first:last:count"; count >= 1 (count 1 pins first).
struct SweepParam {
    std::string name;
    std::vector<double> values;
};

SweepParam parse_sweep_param(const std::string& spec);

/// Runs the cartesian product of the given axes over the base config. Each
/// cell writes into its own subdirectory of base.output_dir; a manifest CSV
/// (one row per cell: directory, parameter values, run status code) lands at
/// base.output_dir/manifest.csv and is mirrored to `log`.
void run_sweep(const SimConfig& base, const std::vector<SweepParam>& params,
               std::ostream& log);

} // namespace gs
