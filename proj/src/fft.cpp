#include "gs/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace gs {

namespace {
// FFTW's planner is not thread-safe; execution of finished plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft2d::Fft2d(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 1 || ny < 1) throw DimensionError("Fft2d dimensions must be >= 1");
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    std::vector<std::complex<double>> in(n), out(n);
    auto* in_p = reinterpret_cast<fftw_complex*>(in.data());
    auto* out_p = reinterpret_cast<fftw_complex*>(out.data());
    // FFTW_UNALIGNED keeps the new-array execute calls valid for any buffer.
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_forward_ = fftw_plan_dft_2d(nx, ny, in_p, out_p, FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_backward_ = fftw_plan_dft_2d(nx, ny, in_p, out_p, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
}

std::vector<std::complex<double>> Fft2d::forward(const Field& f) const {
    if (f.nx() != nx_ || f.ny() != ny_) {
        throw DimensionError("Fft2d::forward: field does not match plan size");
    }
    const std::size_t n = f.size();
    std::vector<std::complex<double>> in(n), out(n);
    const double* src = f.raw();
    for (std::size_t k = 0; k < n; ++k) in[k] = src[k];
    fftw_execute_dft(static_cast<fftw_plan>(plan_forward_),
                     reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Field Fft2d::inverse_real(const std::vector<std::complex<double>>& spectrum,
                          double* max_imag) const {
    const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
    if (spectrum.size() != n) {
        throw DimensionError("Fft2d::inverse_real: spectrum does not match plan size");
    }
    std::vector<std::complex<double>> in(spectrum), out(n);
    fftw_execute_dft(static_cast<fftw_plan>(plan_backward_),
                     reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    Field result(nx_, ny_);
    double* dst = result.raw();
    const double scale = 1.0 / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        dst[k] = out[k].real() * scale;
        worst = std::max(worst, std::fabs(out[k].imag()) * scale);
    }
    if (max_imag) *max_imag = worst;
    return result;
}

} // namespace gs
