#include "gs/operators.hpp"

#include <cmath>
#include <vector>

namespace gs {

Field laplacian9(const Field& f, double h) {
    if (!(h > 0.0)) throw ParameterError("laplacian9: spacing h must be > 0");
    const int nx = f.nx();
    const int ny = f.ny();
    const double inv_h2 = 1.0 / (h * h);
    Field out(nx, ny);
    const double* src = f.raw();
    double* dst = out.raw();

    std::vector<int> jm(ny), jp(ny);
    for (int j = 0; j < ny; ++j) {
        jm[j] = (j == 0 ? ny - 1 : j - 1);
        jp[j] = (j == ny - 1 ? 0 : j + 1);
    }
    for (int i = 0; i < nx; ++i) {
        const int im = (i == 0 ? nx - 1 : i - 1);
        const int ip = (i == nx - 1 ? 0 : i + 1);
        const double* row = src + static_cast<std::size_t>(i) * ny;
        const double* row_m = src + static_cast<std::size_t>(im) * ny;
        const double* row_p = src + static_cast<std::size_t>(ip) * ny;
        double* out_row = dst + static_cast<std::size_t>(i) * ny;
        for (int j = 0; j < ny; ++j) {
            const double c = row[j];
            const double axis = (row_m[j] - c) + (row_p[j] - c) +
                                (row[jm[j]] - c) + (row[jp[j]] - c);
            const double diag = (row_m[jm[j]] - c) + (row_m[jp[j]] - c) +
                                (row_p[jm[j]] - c) + (row_p[jp[j]] - c);
            out_row[j] = (0.2 * axis + 0.05 * diag) * inv_h2;
        }
    }
    return out;
}

Field nonlocal_gamma(const DiscreteKernel& k, const Field& f, ConvolutionPath path) {
    require_same_shape(k.weights(), f, "nonlocal_gamma");
    Field conv = (path == ConvolutionPath::spectral) ? convolve_spectral(k, f)
                                                     : convolve_direct(k, f, true);
    const double lambda = k.total_mass();
    double* c = conv.raw();
    const double* src = f.raw();
    for (std::size_t idx = 0; idx < conv.size(); ++idx) c[idx] -= lambda * src[idx];
    return conv;
}

double laplacian9_symbol(double a, double b) {
    return -1.0 + 0.4 * (std::cos(a) + std::cos(b)) + 0.2 * std::cos(a) * std::cos(b);
}

StencilSymbol laplacian9_symbol_range(double h) {
    if (!(h > 0.0)) throw ParameterError("laplacian9_symbol_range: h must be > 0");
    // s(a,b) is increasing in both cos a and cos b (0.4 + 0.2*cos >= 0.2 > 0),
    // so the minimum sits at (pi,pi) and the maximum at (0,0).
    const double inv_h2 = 1.0 / (h * h);
    return StencilSymbol{-1.6 * inv_h2, 0.0};
}

StencilSymbol gamma_symbol_range(const DiscreteKernel& k) {
    const double lambda = k.total_mass();
    double min_sym = 0.0;
    for (const auto& z : k.spectrum()) {
        min_sym = std::min(min_sym, z.real() - lambda);
    }
    return StencilSymbol{min_sym, 0.0};
}

} // namespace gs
