#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gs {

/// Mismatched or nonpositive grid dimensions.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value outside its admissible range (kappa <= 0, lo >= hi, ...).
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Direct convolution requested on a grid above the practicality guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A time step produced a non-finite entry or an entry beyond the blow-up cap.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(std::uint64_t at_step)
        : std::runtime_error("divergence at step " + std::to_string(at_step)),
          step(at_step) {}
    std::uint64_t step;
};

/// Malformed config text: carries the offending line or key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated snapshot file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failure, wrapped with the path involved.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gs
