#pragma once
#include <utility>

#include "gs/errors.hpp"

namespace gs {

/// Gray-Scott run parameters: feed rate f, kill rate kappa, diffusivities,
/// time step, lattice spacing.
struct ModelParams {
    double f = 0.04;
    double kappa = 0.0636;
    double d_u = 1.0;
    double d_v = 0.5;
    double dt = 1.0;
    double h = 1.0;

    bool operator==(const ModelParams&) const = default;
};

/// Throws ParameterError on kappa <= 0, f < 0, negative diffusivities,
/// dt <= 0 or h <= 0.
void validate_params(const ModelParams& p);

/// Reaction terms. Defined for all reals; negative inputs are the monitors'
/// business, not an arithmetic error.
inline double g1(double u, double v, const ModelParams& p) {
    return -u * v * v + p.f * (1.0 - u);
}

inline double g2(double u, double v, const ModelParams& p) {
    return u * v * v - (p.f + p.kappa) * v;
}

/// Classical RK4 at a fixed step for the space-free system du/dt = g1,
/// dv/dt = g2. Exposed so tests can drive the step directly.
std::pair<double, double> rk4_homogeneous(double u0, double v0, const ModelParams& p,
                                          double t_end, double step);

/// High-accuracy homogeneous reference at step p.dt/100; the oracle for
/// diffusion-free integrator runs.
std::pair<double, double> homogeneous_reference(double u0, double v0,
                                                const ModelParams& p, double t_end);

} // namespace gs
