#pragma once
#include <complex>
#include <vector>

#include "gs/field.hpp"

namespace gs {

/// Thin 2-D DFT wrapper. Forward is the unnormalized transform, inverse
/// carries the 1/(nx*ny) factor, so inverse(forward(f)) == f up to rounding.
/// Plans are built once per instance; execution is safe from multiple threads.
class Fft2d {
public:
    Fft2d(int nx, int ny);
    ~Fft2d();

    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    /// Row-major complex spectrum of a real field, length nx*ny.
    std::vector<std::complex<double>> forward(const Field& f) const;

    /// Real part of the normalized inverse transform. If max_imag is given,
    /// receives the largest |imaginary part| seen before discarding.
    Field inverse_real(const std::vector<std::complex<double>>& spectrum,
                       double* max_imag = nullptr) const;

private:
    int nx_;
    int ny_;
    void* plan_forward_;  // fftw_plan, kept out of the public header
    void* plan_backward_;
};

} // namespace gs
