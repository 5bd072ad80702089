#pragma once
#include <string>
#include <string_view>

#include "gs/field.hpp"
#include "gs/integrator.hpp"
#include "gs/kernel.hpp"
#include "gs/kinetics.hpp"

namespace gs {

/// Full run description. Defaults reproduce the reference setup: local
/// variant, 200x200 lattice of side 200, f=0.04, kappa=0.0636, d_u=1,
/// d_v=0.5, dt=1, epsilon=1, t_end=100000, center-square-noise seeding.
struct SimConfig {
    ModelVariant variant = ModelVariant::local;
    LatticeSpec lattice{200.0, 200};
    ModelParams params{};
    double epsilon = 1.0; // kernel standard deviation; used by the mixed variant
    SeedSpec seed{};
    double t_end = 100000.0;
    int report_every = 100;
    int snapshot_every = 0; // 0 = final snapshot only
    std::string output_dir = "out";
    bool emit_images = false;
    bool waive_stability = false;

    bool operator==(const SimConfig&) const = default;
};

/// Kernel parameters implied by the config (mixed variant only).
KernelSpec kernel_spec(const SimConfig& cfg);

/// Parses the flat "key = value" format, one pair per line, '#' comments.
/// Missing keys take the defaults above; unknown keys raise ConfigError with
/// the nearest known key as a suggestion; semantic violations name the key.
SimConfig parse_config(std::string_view text);

/// Emits every key in a fixed order; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& cfg);

std::string to_string(ModelVariant v);
std::string to_string(SeedMode m);

} // namespace gs
