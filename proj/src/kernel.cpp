#include "gs/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gs {

DiscreteKernel::DiscreteKernel(Field w, std::shared_ptr<const Fft2d> fft)
    : weights_(std::move(w)), fft_(std::move(fft)) {
    spectrum_ = fft_->forward(weights_);
    double s = 0.0;
    for (double x : weights_.data()) s += x;
    total_mass_ = s;
}

DiscreteKernel build_gaussian_kernel(const KernelSpec& spec) {
    if (!(spec.epsilon > 0.0)) throw ParameterError("kernel epsilon must be > 0");
    if (spec.nx < 1 || spec.ny < 1) throw DimensionError("kernel dimensions must be >= 1");
    if (!(spec.h > 0.0)) throw ParameterError("kernel spacing h must be > 0");

    Field w(spec.nx, spec.ny);
    const double inv_two_eps2 = 1.0 / (2.0 * spec.epsilon * spec.epsilon);
    double sum = 0.0;
    for (int p = 0; p < spec.nx; ++p) {
        const double dx = spec.h * std::min(p, spec.nx - p);
        for (int q = 0; q < spec.ny; ++q) {
            const double dy = spec.h * std::min(q, spec.ny - q);
            const double val = std::exp(-(dx * dx + dy * dy) * inv_two_eps2);
            w(p, q) = val;
            sum += val;
        }
    }
    for (double& x : w.data()) x /= sum;
    return DiscreteKernel(std::move(w), std::make_shared<Fft2d>(spec.nx, spec.ny));
}

DiscreteKernel kernel_from_weights(Field weights) {
    const int nx = weights.nx();
    const int ny = weights.ny();
    return DiscreteKernel(std::move(weights), std::make_shared<Fft2d>(nx, ny));
}

Field convolve_spectral(const DiscreteKernel& k, const Field& f) {
    require_same_shape(k.weights(), f, "convolve_spectral");
    auto f_hat = k.fft().forward(f);
    const auto& k_hat = k.spectrum();
    for (std::size_t i = 0; i < f_hat.size(); ++i) f_hat[i] *= k_hat[i];
    double max_imag = 0.0;
    Field result = k.fft().inverse_real(f_hat, &max_imag);
    const double cap = 1e-10 * sup_norm(f);
    if (max_imag > cap) {
        throw ParameterError("convolve_spectral: imaginary residual " +
                             std::to_string(max_imag) + " exceeds " + std::to_string(cap));
    }
    return result;
}

Field convolve_direct(const DiscreteKernel& k, const Field& f, bool allow_large) {
    require_same_shape(k.weights(), f, "convolve_direct");
    const int nx = f.nx();
    const int ny = f.ny();
    if (!allow_large && static_cast<long>(nx) * ny > 64L * 64L) {
        throw SizeGuardError("convolve_direct: " + std::to_string(nx) + "x" +
                             std::to_string(ny) +
                             " exceeds the 64x64 guard; pass allow_large to override");
    }
    const Field& w = k.weights();
    Field out(nx, ny);
    // (w * f)(i,j) = sum_{p,q} w(p,q) f(i-p, j-q), indices wrapped.
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            double acc = 0.0;
            for (int p = 0; p < nx; ++p) {
                const int fi = i - p < 0 ? i - p + nx : i - p;
                for (int q = 0; q < ny; ++q) {
                    const int fj = j - q < 0 ? j - q + ny : j - q;
                    acc += w(p, q) * f(fi, fj);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

double kernel_mass_bound(const DiscreteKernel& k) {
    // Circulant operator: every row of the convolution matrix holds the same
    // weights, so the row-sum maximum is just the total weight.
    double s = 0.0;
    for (double x : k.weights().data()) s += x;
    return s;
}

} // namespace gs
