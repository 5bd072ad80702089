#pragma once
#include <filesystem>

#include "gs/field.hpp"

namespace gs {

/// Writes an 8-bit binary PGM (P5). pixel = round(255 * clamp((x-lo)/(hi-lo)));
/// field row i becomes image row i, column j becomes image column j.
void export_image(const Field& f, const std::filesystem::path& path, double lo,
                  double hi);

} // namespace gs
