#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gs/field.hpp"
#include "gs/integrator.hpp"
#include "gs/kernel.hpp"
#include "gs/kinetics.hpp"

namespace gs {

/// Run constants the trajectory is audited against, fixed from the initial
/// data: sup_bound = max(sup|u0|, 1) and
/// mass_bound = max(L^2 / min(kappa,1), mass(u0)+mass(v0)).
struct Bounds {
    double sup_bound = 0.0;
    double mass_bound = 0.0;
};

Bounds compute_bounds(const Field& u0, const Field& v0, const ModelParams& p,
                      const LatticeSpec& lattice);

/// One audit checkpoint. A named entry lands in violations when a check
/// breaches its tolerance; entries ending in "_advisory" are reported but do
/// not count as hard failures (the sup bound is only proved for the mixed
/// model, so the local variant carries it as advice).
struct InvariantReport {
    std::uint64_t step = 0;
    double time = 0.0;
    double min_u = 0.0;
    double min_v = 0.0;
    double sup_u = 0.0;
    double sup_v = 0.0;
    double total_mass = 0.0;
    double sup_bound = 0.0;
    double mass_bound = 0.0;
    double gamma_residual = 0.0;
    double laplacian_residual = 0.0;
    std::vector<std::string> violations;
};

/// Audit tolerances. tol_neg absorbs forward-Euler rounding undershoot;
/// the relative slack absorbs O(dt) scheme error in the continuum bounds.
inline constexpr double kNegativityTol = 1e-9;
inline constexpr double kBoundSlack = 1e-6;
inline constexpr double kResidualScale = 1e-8;

/// Fills every report field from the state; never aborts. The kernel is
/// required for the mixed variant and ignored for the local one
/// (gamma_residual is 0 without a kernel).
InvariantReport audit(const SimState& s, const Bounds& bounds, const ModelParams& p,
                      const LatticeSpec& lattice, ModelVariant variant,
                      const DiscreteKernel* kernel = nullptr);

bool has_hard_violation(const InvariantReport& r);

/// CSV sink: 12 columns, floats at 17 significant digits, violations
/// semicolon-joined in the last column (empty when none).
void write_report_header(std::ostream& out);
void write_report_row(const InvariantReport& r, std::ostream& out);

} // namespace gs
