#pragma once
#include <complex>
#include <memory>
#include <vector>

#include "gs/fft.hpp"
#include "gs/field.hpp"

namespace gs {

/// Gaussian kernel parameters: epsilon is the standard deviation in the same
/// length units as the lattice spacing h.
struct KernelSpec {
    double epsilon = 1.0;
    int nx = 0;
    int ny = 0;
    double h = 1.0;
};

/// A realized periodic convolution kernel, centered at index (0,0), with its
/// forward transform cached. Immutable after construction; safe to share.
class DiscreteKernel {
public:
    const Field& weights() const { return weights_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }
    double total_mass() const { return total_mass_; }
    int nx() const { return weights_.nx(); }
    int ny() const { return weights_.ny(); }
    const Fft2d& fft() const { return *fft_; }

private:
    DiscreteKernel(Field w, std::shared_ptr<const Fft2d> fft);

    Field weights_;
    std::vector<std::complex<double>> spectrum_;
    double total_mass_ = 0.0;
    std::shared_ptr<const Fft2d> fft_;

    friend DiscreteKernel build_gaussian_kernel(const KernelSpec&);
    friend DiscreteKernel kernel_from_weights(Field weights);
};

/// Samples the Gaussian at minimum-image (shortest wrapped) distances and
/// normalizes the discrete sum to 1.
DiscreteKernel build_gaussian_kernel(const KernelSpec& spec);

/// Wraps arbitrary weights without normalizing (delta/scaled/zero kernels in
/// tests and diagnostics). Spectrum and mass are computed from the weights
/// as given.
DiscreteKernel kernel_from_weights(Field weights);

/// Circular convolution via the cached spectrum. Imaginary residuals of the
/// inverse transform are checked against 1e-10 * sup_norm(f), then dropped.
Field convolve_spectral(const DiscreteKernel& k, const Field& f);

/// Literal O(N^4) periodic double sum; the reference path for the spectral
/// route. Guarded to nx*ny <= 64^2 unless allow_large is set.
Field convolve_direct(const DiscreteKernel& k, const Field& f, bool allow_large = false);

/// max over x of sum_y phi(x,y); equals total_mass for this circulant kernel.
double kernel_mass_bound(const DiscreteKernel& k);

} // namespace gs
