#include "gs/monitors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "gs/operators.hpp"

namespace gs {

Bounds compute_bounds(const Field& u0, const Field& v0, const ModelParams& p,
                      const LatticeSpec& lattice) {
    if (!(p.kappa > 0.0)) throw ParameterError("compute_bounds: kappa must be > 0");
    const double kappa_tilde = std::min(p.kappa, 1.0);
    Bounds b;
    b.sup_bound = std::max(sup_norm(u0), 1.0);
    b.mass_bound = std::max(lattice.area() / kappa_tilde,
                            mass(u0, lattice.spacing) + mass(v0, lattice.spacing));
    return b;
}

InvariantReport audit(const SimState& s, const Bounds& bounds, const ModelParams& p,
                      const LatticeSpec& lattice, ModelVariant variant,
                      const DiscreteKernel* kernel) {
    InvariantReport r;
    r.step = s.step;
    r.time = s.time;
    r.min_u = min_entry(s.u);
    r.min_v = min_entry(s.v);
    r.sup_u = sup_norm(s.u);
    r.sup_v = sup_norm(s.v);
    r.total_mass = mass(s.u, p.h) + mass(s.v, p.h);
    r.sup_bound = bounds.sup_bound;
    r.mass_bound = bounds.mass_bound;

    if (variant == ModelVariant::mixed) {
        if (!kernel) throw ParameterError("audit: mixed variant needs a kernel");
        r.gamma_residual = std::fabs(mass(nonlocal_gamma(*kernel, s.u), p.h));
    } else {
        r.gamma_residual = 0.0;
    }
    r.laplacian_residual = std::fabs(mass(laplacian9(s.v, p.h), p.h));

    if (r.min_u < -kNegativityTol) r.violations.push_back("u_negative");
    if (r.min_v < -kNegativityTol) r.violations.push_back("v_negative");

    const double sup_limit = bounds.sup_bound * (1.0 + kBoundSlack) + 1e-9;
    if (r.sup_u > sup_limit) {
        r.violations.push_back(variant == ModelVariant::mixed ? "sup_u_bound"
                                                              : "sup_u_bound_advisory");
    }
    if (r.total_mass > bounds.mass_bound * (1.0 + kBoundSlack)) {
        r.violations.push_back("mass_bound");
    }
    const double residual_limit =
        kResidualScale * (1.0 + r.sup_u + r.sup_v) * lattice.area();
    if (r.gamma_residual > residual_limit) r.violations.push_back("gamma_conservation");
    if (r.laplacian_residual > residual_limit) {
        r.violations.push_back("laplacian_conservation");
    }
    return r;
}

bool has_hard_violation(const InvariantReport& r) {
    for (const auto& name : r.violations) {
        if (!name.ends_with("_advisory")) return true;
    }
    return false;
}

namespace {
void put(std::ostream& out, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf;
}
} // namespace

void write_report_header(std::ostream& out) {
    out << "step,time,min_u,min_v,sup_u,sup_v,total_mass,sup_bound,mass_bound,"
           "gamma_residual,laplacian_residual,violations\n";
}

void write_report_row(const InvariantReport& r, std::ostream& out) {
    out << r.step << ',';
    put(out, r.time);
    out << ',';
    put(out, r.min_u);
    out << ',';
    put(out, r.min_v);
    out << ',';
    put(out, r.sup_u);
    out << ',';
    put(out, r.sup_v);
    out << ',';
    put(out, r.total_mass);
    out << ',';
    put(out, r.sup_bound);
    out << ',';
    put(out, r.mass_bound);
    out << ',';
    put(out, r.gamma_residual);
    out << ',';
    put(out, r.laplacian_residual);
    out << ',';
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        if (i) out << ';';
        out << r.violations[i];
    }
    out << '\n';
}

} // namespace gs
