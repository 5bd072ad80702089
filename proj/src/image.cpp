#include "gs/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

namespace gs {

void export_image(const Field& f, const std::filesystem::path& path, double lo,
                  double hi) {
    if (!(lo < hi)) throw ParameterError("export_image: need lo < hi");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "P5\n" << f.ny() << ' ' << f.nx() << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(f.ny()));
    const double scale = 1.0 / (hi - lo);
    for (int i = 0; i < f.nx(); ++i) {
        for (int j = 0; j < f.ny(); ++j) {
            const double t = std::clamp((f(i, j) - lo) * scale, 0.0, 1.0);
            row[static_cast<std::size_t>(j)] =
                static_cast<unsigned char>(std::lround(255.0 * t));
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace gs
