#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "gs/field.hpp"
#include "gs/kernel.hpp"
#include "gs/kinetics.hpp"

namespace gs {

/// local: both species diffuse by the 9-point Laplacian.
/// mixed: u diffuses by the nonlocal convolution operator, v by the Laplacian.
enum class ModelVariant { local, mixed };

enum class SeedMode { uniform, center_square, center_square_noise };

/// Initial-condition recipe. uniform is (u,v) = (1,0) everywhere; the center
/// modes overwrite a centered block_side x block_side block with (u_in, v_in),
/// optionally dithered by uniform noise in [-amplitude, amplitude].
struct SeedSpec {
    SeedMode mode = SeedMode::center_square_noise;
    int block_side = 20;
    double u_in = 0.5;
    double v_in = 0.25;
    double noise_amplitude = 0.02;
    std::uint64_t rng_seed = 1;

    bool operator==(const SeedSpec&) const = default;
};

struct SimState {
    Field u;
    Field v;
    std::uint64_t step = 0;
    double time = 0.0;
};

/// Entries with |value| above this cap abort the step as divergence; the
/// theory guarantees uniform boundedness, so crossing it is numerical.
inline constexpr double kDivergenceCap = 1e6;

SimState seed(const SeedSpec& spec, const LatticeSpec& lattice);

/// One fully explicit forward-Euler step of the local model. Both updates
/// read only the old fields. Throws DivergenceError (carrying the step index)
/// if any produced entry is non-finite or beyond kDivergenceCap.
SimState step_local(const SimState& s, const ModelParams& p);

/// Same contract; the u-diffusion term is d_u * ((phi * u) - u) with the
/// convolution evaluated spectrally.
SimState step_mixed(const SimState& s, const ModelParams& p, const DiscreteKernel& k);

/// Result of the pre-run linear-stability screen. Each margin is
/// dt * D * |most negative operator symbol| and must stay <= limit (2, the
/// forward-Euler circle). Reaction stiffness is informational only.
struct StabilityReport {
    bool pass = true;
    double limit = 2.0;
    double margin_u = 0.0;
    double margin_v = 0.0;
    double reaction_jacobian_bound = 0.0;
    std::string summary() const;
};

/// Screens dt against the operator symbol ranges: the Laplacian bound for
/// each locally diffusing species, the measured spectrum bound for the
/// nonlocal one. Advisory: the caller decides whether a failure blocks.
StabilityReport stability_check(const ModelParams& p, ModelVariant variant,
                                const DiscreteKernel* kernel = nullptr,
                                const SimState* state = nullptr);

} // namespace gs
