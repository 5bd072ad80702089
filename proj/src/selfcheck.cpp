#include "gs/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gs/config.hpp"
#include "gs/integrator.hpp"
#include "gs/monitors.hpp"
#include "gs/operators.hpp"
#include "gs/snapshot.hpp"

namespace gs {

namespace {

Field random_field(int nx, int ny, std::mt19937_64& rng, double lo = 0.0,
                   double hi = 1.0) {
    Field f(nx, ny);
    for (double& x : f.data()) {
        x = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    return f;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Each check returns "" on pass, a short diagnostic on failure.
using Check = std::function<std::string()>;

std::string check_field_reductions() {
    std::mt19937_64 rng(11);
    const Field f = random_field(9, 7, rng, -2.0, 3.0);
    double scan_max = 0.0, scan_min = f(0, 0), scan_sum = 0.0;
    for (int i = 0; i < f.nx(); ++i) {
        for (int j = 0; j < f.ny(); ++j) {
            scan_max = std::max(scan_max, std::fabs(f(i, j)));
            scan_min = std::min(scan_min, f(i, j));
            scan_sum += f(i, j);
        }
    }
    if (sup_norm(f) != scan_max) return "sup_norm != exhaustive scan";
    if (min_entry(f) != scan_min) return "min_entry != exhaustive scan";
    if (std::fabs(mass(f, 0.5) - 0.25 * scan_sum) > 1e-12 * std::fabs(scan_sum)) {
        return "mass != h^2 * sum";
    }
    if (f(3 + f.nx(), 2) != f(3, 2) || f(3, 2 - 7 * f.ny()) != f(3, 2)) {
        return "periodic indexing broken";
    }
    return "";
}

std::string check_kernel_normalization() {
    const auto k = build_gaussian_kernel(KernelSpec{1.0, 16, 16, 1.0});
    if (std::fabs(k.total_mass() - 1.0) > 1e-14) {
        return "kernel mass " + num(k.total_mass());
    }
    for (int p = 0; p < 16; ++p) {
        for (int q = 0; q < 16; ++q) {
            if (k.weights()(p, q) != k.weights()(-p, -q)) {
                return "kernel not symmetric";
            }
        }
    }
    const double ratio = k.weights()(0, 0) / k.weights()(1, 0);
    if (std::fabs(ratio - std::exp(0.5)) > 1e-12) {
        return "center ratio " + num(ratio) + " != e^0.5";
    }
    if (std::fabs(kernel_mass_bound(k) - 1.0) > 1e-14) return "mass bound != 1";
    return "";
}

std::string check_spectral_matches_direct() {
    std::mt19937_64 rng(23);
    for (int n : {8, 12, 16}) {
        const auto k = build_gaussian_kernel(KernelSpec{1.0, n, n, 1.0});
        const Field f = random_field(n, n, rng);
        const Field a = convolve_spectral(k, f);
        const Field b = convolve_direct(k, f);
        const double ref = sup_norm(b);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (std::fabs(a(i, j) - b(i, j)) > 1e-12 * ref) {
                    return "mismatch at n=" + std::to_string(n);
                }
            }
        }
    }
    return "";
}

std::string check_convolution_conserves() {
    std::mt19937_64 rng(29);
    const auto k = build_gaussian_kernel(KernelSpec{1.0, 12, 12, 1.0});
    const Field c = field_constant(12, 12, 0.7);
    const Field conv_c = convolve_spectral(k, c);
    for (double x : conv_c.data()) {
        if (std::fabs(x - 0.7) > 1e-13) return "constant not preserved";
    }
    const Field f = random_field(12, 12, rng);
    const double m0 = mass(f, 1.0);
    if (std::fabs(mass(convolve_spectral(k, f), 1.0) - m0) > 1e-12 * std::fabs(m0)) {
        return "mass not conserved";
    }
    return "";
}

std::string check_laplacian_basics() {
    const Field c = field_constant(10, 10, 3.25);
    for (double x : laplacian9(c, 1.0).data()) {
        if (x != 0.0) return "constant not annihilated exactly";
    }
    Field checker(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) checker(i, j) = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    }
    const Field lc = laplacian9(checker, 1.0);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (std::fabs(lc(i, j) + 1.6 * checker(i, j)) > 1e-15) {
                return "checkerboard response != -1.6";
            }
        }
    }
    return "";
}

std::string check_plane_wave_symbol() {
    const int n = 8;
    const double tau = 2.0 * std::acos(-1.0);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const double a = tau * p / n;
            const double b = tau * q / n;
            Field w(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) w(i, j) = std::cos(a * i + b * j + 0.3);
            }
            const Field lw = laplacian9(w, 1.0);
            const double s = laplacian9_symbol(a, b);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (std::fabs(lw(i, j) - s * w(i, j)) > 1e-12) {
                        return "symbol mismatch at (" + std::to_string(p) + "," +
                               std::to_string(q) + ")";
                    }
                }
            }
        }
    }
    return "";
}

std::string check_operator_conservation() {
    std::mt19937_64 rng(37);
    const int n = 16;
    const auto k = build_gaussian_kernel(KernelSpec{1.0, n, n, 1.0});
    for (int trial = 0; trial < 5; ++trial) {
        const Field f = random_field(n, n, rng, -1.0, 2.0);
        const double tol = 1e-10 * sup_norm(f) * n * n;
        if (std::fabs(mass(laplacian9(f, 1.0), 1.0)) > tol) {
            return "laplacian mass residual too large";
        }
        if (std::fabs(mass(nonlocal_gamma(k, f), 1.0)) > tol) {
            return "gamma mass residual too large";
        }
    }
    const Field gamma_c = nonlocal_gamma(k, field_constant(n, n, 1.0));
    if (sup_norm(gamma_c) > 1e-13) return "gamma does not annihilate constants";
    return "";
}

std::string check_kinetics() {
    const ModelParams p{0.04, 0.0636, 1.0, 0.5, 1.0, 1.0};
    if (g1(1.0, 0.0, p) != 0.0 || g2(1.0, 0.0, p) != 0.0) {
        return "(1,0) is not a rest state";
    }
    if (std::fabs(g1(0.5, 0.25, p) + 0.01125) > 1e-17) return "g1 hand value";
    if (std::fabs(g2(0.5, 0.25, p) - 0.00535) > 1e-17) return "g2 hand value";
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double u = 4.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const double v = 4.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        if (g1(0.0, v, p) != p.f) return "quasi-positivity g1(0,v) != f";
        if (g2(u, 0.0, p) != 0.0) return "quasi-positivity g2(u,0) != 0";
        const double sum = g1(u, v, p) + g2(u, v, p);
        const double expected = p.f * (1.0 - u) - (p.f + p.kappa) * v;
        if (std::fabs(sum - expected) > 1e-15) return "sum structure violated";
    }
    return "";
}

std::string check_homogeneous_reference() {
    const ModelParams p{0.04, 0.0636, 0.0, 0.0, 0.01, 1.0};
    const auto eq = homogeneous_reference(1.0, 0.0, p, 5.0);
    if (eq.first != 1.0 || eq.second != 0.0) return "equilibrium drifts";
    const auto decay = homogeneous_reference(0.3, 0.0, p, 2.0);
    const double closed = 1.0 + (0.3 - 1.0) * std::exp(-p.f * 2.0);
    if (std::fabs(decay.first - closed) > 1e-10 || decay.second != 0.0) {
        return "closed-form linear decay missed: " + num(decay.first);
    }
    return "";
}

std::string check_equilibrium_fixed_point() {
    const LatticeSpec lattice(16.0, 16);
    ModelParams p;
    p.h = lattice.spacing;
    SimState s = seed(SeedSpec{SeedMode::uniform}, lattice);
    const auto k = build_gaussian_kernel(KernelSpec{1.0, 16, 16, p.h});
    SimState sl = s, sm = s;
    for (int i = 0; i < 50; ++i) {
        sl = step_local(sl, p);
        sm = step_mixed(sm, p, k);
    }
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            if (std::fabs(sl.u(i, j) - 1.0) > 1e-13 || sl.v(i, j) != 0.0) {
                return "local drifts off (1,0)";
            }
            if (std::fabs(sm.u(i, j) - 1.0) > 1e-13 || sm.v(i, j) != 0.0) {
                return "mixed drifts off (1,0)";
            }
        }
    }
    return "";
}

std::string check_reaction_only_step() {
    std::mt19937_64 rng(43);
    const LatticeSpec lattice(8.0, 8);
    ModelParams p;
    p.d_u = 0.0;
    p.d_v = 0.0;
    p.dt = 0.01;
    p.h = lattice.spacing;
    SimState s;
    s.u = random_field(8, 8, rng, 0.2, 1.0);
    s.v = random_field(8, 8, rng, 0.0, 0.5);
    const SimState next = step_local(s, p);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const double eu = s.u(i, j) + p.dt * g1(s.u(i, j), s.v(i, j), p);
            const double ev = s.v(i, j) + p.dt * g2(s.u(i, j), s.v(i, j), p);
            if (std::fabs(next.u(i, j) - eu) > 1e-15 ||
                std::fabs(next.v(i, j) - ev) > 1e-15) {
                return "diffusion-free step != scalar Euler";
            }
        }
    }
    return "";
}

std::string check_stability_gate() {
    ModelParams p; // paper defaults, dt = 1
    const auto ok = stability_check(p, ModelVariant::local);
    if (!ok.pass || std::fabs(ok.margin_u - 1.6) > 1e-12) {
        return "dt=1 should pass with margin 1.6, got " + num(ok.margin_u);
    }
    p.dt = 1.3;
    if (stability_check(p, ModelVariant::local).pass) {
        return "dt=1.3 should fail (margin 2.08)";
    }
    return "";
}

std::string check_snapshot_roundtrip() {
    std::mt19937_64 rng(47);
    SimState s;
    s.u = random_field(5, 9, rng);
    s.v = random_field(5, 9, rng);
    s.step = 1234;
    s.time = 1234.0 * 0.25;
    const auto path = std::filesystem::temp_directory_path() /
                      "gs_selfcheck_snapshot.gsf";
    write_snapshot(s, 0.25, path);
    const auto expected_bytes = 28u + 16u * 45u;
    if (std::filesystem::file_size(path) != expected_bytes) {
        std::filesystem::remove(path);
        return "file size != 28 + 16*nx*ny";
    }
    const LoadedSnapshot back = read_snapshot(path);
    std::filesystem::remove(path);
    if (back.dt != 0.25 || back.state.step != 1234) return "header mismatch";
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 9; ++j) {
            if (back.state.u(i, j) != s.u(i, j) || back.state.v(i, j) != s.v(i, j)) {
                return "field bytes mismatch";
            }
        }
    }
    return "";
}

std::string check_config_roundtrip() {
    const SimConfig base = parse_config("");
    if (parse_config(serialize_config(base)) != base) return "defaults do not round-trip";
    SimConfig mixed = parse_config("variant = mixed\nn = 32\nL = 32\ndt = 0.5");
    if (mixed.variant != ModelVariant::mixed || mixed.epsilon != 1.0) {
        return "mixed defaults wrong";
    }
    if (parse_config(serialize_config(mixed)) != mixed) return "mixed does not round-trip";
    return "";
}

std::string check_seed_determinism() {
    const LatticeSpec lattice(32.0, 32);
    const SeedSpec spec{SeedMode::center_square_noise, 10, 0.5, 0.25, 0.02, 777};
    const SimState a = seed(spec, lattice);
    const SimState b = seed(spec, lattice);
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            if (a.u(i, j) != b.u(i, j) || a.v(i, j) != b.v(i, j)) {
                return "same rng_seed gave different states";
            }
        }
    }
    int differing = 0;
    const SimState uniform = seed(SeedSpec{SeedMode::uniform}, lattice);
    const SimState square = seed(SeedSpec{SeedMode::center_square, 10, 0.5, 0.25, 0.0, 1},
                                 lattice);
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            if (square.u(i, j) != uniform.u(i, j) || square.v(i, j) != uniform.v(i, j)) {
                ++differing;
            }
        }
    }
    if (differing != 100) return "center block changed " + std::to_string(differing) +
                                 " cells, want 100";
    return "";
}

std::string check_audit_at_equilibrium() {
    const LatticeSpec lattice(16.0, 16);
    ModelParams p;
    p.h = lattice.spacing;
    const SimState s = seed(SeedSpec{SeedMode::uniform}, lattice);
    const auto k = build_gaussian_kernel(KernelSpec{1.0, 16, 16, p.h});
    const Bounds b = compute_bounds(s.u, s.v, p, lattice);
    const InvariantReport r = audit(s, b, p, lattice, ModelVariant::mixed, &k);
    if (!r.violations.empty()) return "violations at equilibrium";
    if (std::fabs(r.total_mass - 256.0) > 1e-10) return "mass != |Omega|";
    if (r.gamma_residual > 1e-13) return "gamma residual " + num(r.gamma_residual);
    return "";
}

} // namespace

int run_self_checks(std::ostream& out) {
    const std::pair<const char*, Check> checks[] = {
        {"field_reductions", check_field_reductions},
        {"kernel_normalization", check_kernel_normalization},
        {"spectral_matches_direct", check_spectral_matches_direct},
        {"convolution_conserves", check_convolution_conserves},
        {"laplacian_basics", check_laplacian_basics},
        {"plane_wave_symbol", check_plane_wave_symbol},
        {"operator_conservation", check_operator_conservation},
        {"kinetics", check_kinetics},
        {"homogeneous_reference", check_homogeneous_reference},
        {"equilibrium_fixed_point", check_equilibrium_fixed_point},
        {"reaction_only_step", check_reaction_only_step},
        {"stability_gate", check_stability_gate},
        {"snapshot_roundtrip", check_snapshot_roundtrip},
        {"config_roundtrip", check_config_roundtrip},
        {"seed_determinism", check_seed_determinism},
        {"audit_at_equilibrium", check_audit_at_equilibrium},
    };
    int failures = 0;
    for (const auto& [name, check] : checks) {
        std::string detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            out << "ok   " << name << '\n';
        } else {
            ++failures;
            out << "FAIL " << name << ": " << detail << '\n';
        }
    }
    return failures;
}

} // namespace gs
