#include "gs/kinetics.hpp"

#include <cmath>

namespace gs {

void validate_params(const ModelParams& p) {
    if (!(p.kappa > 0.0)) throw ParameterError("kappa must be > 0");
    if (p.f < 0.0) throw ParameterError("f must be >= 0");
    if (p.d_u < 0.0) throw ParameterError("d_u must be >= 0");
    if (p.d_v < 0.0) throw ParameterError("d_v must be >= 0");
    if (!(p.dt > 0.0)) throw ParameterError("dt must be > 0");
    if (!(p.h > 0.0)) throw ParameterError("h must be > 0");
}

std::pair<double, double> rk4_homogeneous(double u0, double v0, const ModelParams& p,
                                          double t_end, double step) {
    if (t_end < 0.0) throw ParameterError("t_end must be >= 0");
    if (!(step > 0.0)) throw ParameterError("rk4 step must be > 0");
    if (t_end == 0.0) return {u0, v0};

    // Snap the step so the last substep lands exactly on t_end.
    const long n = std::max(1L, std::lround(t_end / step));
    const double hh = t_end / static_cast<double>(n);

    double u = u0;
    double v = v0;
    for (long i = 0; i < n; ++i) {
        const double k1u = g1(u, v, p);
        const double k1v = g2(u, v, p);
        const double k2u = g1(u + 0.5 * hh * k1u, v + 0.5 * hh * k1v, p);
        const double k2v = g2(u + 0.5 * hh * k1u, v + 0.5 * hh * k1v, p);
        const double k3u = g1(u + 0.5 * hh * k2u, v + 0.5 * hh * k2v, p);
        const double k3v = g2(u + 0.5 * hh * k2u, v + 0.5 * hh * k2v, p);
        const double k4u = g1(u + hh * k3u, v + hh * k3v, p);
        const double k4v = g2(u + hh * k3u, v + hh * k3v, p);
        u += hh / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += hh / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    return {u, v};
}

std::pair<double, double> homogeneous_reference(double u0, double v0,
                                                const ModelParams& p, double t_end) {
    return rk4_homogeneous(u0, v0, p, t_end, p.dt / 100.0);
}

} // namespace gs
