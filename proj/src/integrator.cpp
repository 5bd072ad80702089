#include "gs/integrator.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "gs/operators.hpp"

namespace gs {

namespace {

// mt19937_64 output mapped to [0,1) by the 53-bit ladder; both halves are
// pinned by the standard, so seeded streams are identical across platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool entry_ok(double x) { return std::fabs(x) <= kDivergenceCap; }

} // namespace

SimState seed(const SeedSpec& spec, const LatticeSpec& lattice) {
    const int n = lattice.points;
    SimState s;
    s.u = field_constant(n, n, 1.0);
    s.v = field_constant(n, n, 0.0);
    s.step = 0;
    s.time = 0.0;
    if (spec.mode == SeedMode::uniform) return s;

    const int b = spec.block_side;
    if (b < 1 || b > n) {
        throw ParameterError("seed block_side " + std::to_string(b) +
                             " does not fit a " + std::to_string(n) + "-point lattice");
    }
    if (spec.noise_amplitude < 0.0) throw ParameterError("noise_amplitude must be >= 0");

    const int start = (n - b) / 2;
    if (spec.mode == SeedMode::center_square) {
        for (int i = start; i < start + b; ++i) {
            for (int j = start; j < start + b; ++j) {
                s.u(i, j) = spec.u_in;
                s.v(i, j) = spec.v_in;
            }
        }
    } else {
        // Row-major draw order, u then v per cell, for reproducible streams.
        std::mt19937_64 rng(spec.rng_seed);
        const double amp = spec.noise_amplitude;
        for (int i = start; i < start + b; ++i) {
            for (int j = start; j < start + b; ++j) {
                s.u(i, j) = spec.u_in + amp * (2.0 * uniform01(rng) - 1.0);
                s.v(i, j) = spec.v_in + amp * (2.0 * uniform01(rng) - 1.0);
            }
        }
    }
    return s;
}

SimState step_local(const SimState& s, const ModelParams& p) {
    require_same_shape(s.u, s.v, "step_local");
    const Field lap_u = laplacian9(s.u, p.h);
    const Field lap_v = laplacian9(s.v, p.h);

    const int nx = s.u.nx();
    const int ny = s.u.ny();
    SimState next;
    next.u = Field(nx, ny);
    next.v = Field(nx, ny);
    const double* u = s.u.raw();
    const double* v = s.v.raw();
    const double* lu = lap_u.raw();
    const double* lv = lap_v.raw();
    double* un = next.u.raw();
    double* vn = next.v.raw();
    const std::size_t n = s.u.size();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = u[i];
        const double vi = v[i];
        const double uvv = ui * vi * vi;
        un[i] = ui + p.dt * (p.d_u * lu[i] + (-uvv + p.f * (1.0 - ui)));
        vn[i] = vi + p.dt * (p.d_v * lv[i] + (uvv - (p.f + p.kappa) * vi));
        ok = ok && entry_ok(un[i]) && entry_ok(vn[i]);
    }
    if (!ok) throw DivergenceError(s.step + 1);
    next.step = s.step + 1;
    next.time = static_cast<double>(next.step) * p.dt;
    return next;
}

SimState step_mixed(const SimState& s, const ModelParams& p, const DiscreteKernel& k) {
    require_same_shape(s.u, s.v, "step_mixed");
    require_same_shape(k.weights(), s.u, "step_mixed");
    const Field conv_u = convolve_spectral(k, s.u);
    const Field lap_v = laplacian9(s.v, p.h);

    const int nx = s.u.nx();
    const int ny = s.u.ny();
    SimState next;
    next.u = Field(nx, ny);
    next.v = Field(nx, ny);
    const double* u = s.u.raw();
    const double* v = s.v.raw();
    const double* cu = conv_u.raw();
    const double* lv = lap_v.raw();
    double* un = next.u.raw();
    double* vn = next.v.raw();
    const std::size_t n = s.u.size();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = u[i];
        const double vi = v[i];
        const double uvv = ui * vi * vi;
        un[i] = ui + p.dt * (p.d_u * (cu[i] - ui) + (-uvv + p.f * (1.0 - ui)));
        vn[i] = vi + p.dt * (p.d_v * lv[i] + (uvv - (p.f + p.kappa) * vi));
        ok = ok && entry_ok(un[i]) && entry_ok(vn[i]);
    }
    if (!ok) throw DivergenceError(s.step + 1);
    next.step = s.step + 1;
    next.time = static_cast<double>(next.step) * p.dt;
    return next;
}

std::string StabilityReport::summary() const {
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "%s (u margin %.6g, v margin %.6g, limit %g, reaction |J| <= %.6g)",
                  pass ? "pass" : "FAIL", margin_u, margin_v, limit,
                  reaction_jacobian_bound);
    return buf;
}

StabilityReport stability_check(const ModelParams& p, ModelVariant variant,
                                const DiscreteKernel* kernel, const SimState* state) {
    validate_params(p);
    StabilityReport r;
    const double lap_min = std::fabs(laplacian9_symbol_range(p.h).min_eigenvalue);
    if (variant == ModelVariant::local) {
        r.margin_u = p.dt * p.d_u * lap_min;
    } else {
        if (!kernel) throw ParameterError("stability_check: mixed variant needs a kernel");
        r.margin_u = p.dt * p.d_u * std::fabs(gamma_symbol_range(*kernel).min_eigenvalue);
    }
    r.margin_v = p.dt * p.d_v * lap_min;
    r.pass = r.margin_u <= r.limit && r.margin_v <= r.limit;

    // Reaction stiffness, reported but never failing: the largest Jacobian
    // entry |dg/d(u,v)| over the sampled state (or the (1,0) rest state).
    double max_u = 1.0, max_v = 0.0;
    if (state) {
        max_u = sup_norm(state->u);
        max_v = sup_norm(state->v);
    }
    const double j11 = max_v * max_v + p.f;
    const double j12 = 2.0 * max_u * max_v;
    const double j22 = 2.0 * max_u * max_v + p.f + p.kappa;
    r.reaction_jacobian_bound = std::max({j11, j12, max_v * max_v, j22});
    return r;
}

} // namespace gs
