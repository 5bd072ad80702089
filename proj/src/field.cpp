#include "gs/field.hpp"

#include <cmath>
#include <string>

namespace gs {

Field::Field(int nx, int ny, double fill) : nx_(nx), ny_(ny) {
    if (nx < 1 || ny < 1) {
        throw DimensionError("Field dimensions must be >= 1, got " +
                             std::to_string(nx) + "x" + std::to_string(ny));
    }
    data_.assign(static_cast<std::size_t>(nx) * ny, fill);
}

LatticeSpec::LatticeSpec(double L, int n) : length(L), points(n) {
    if (n < 1) throw ParameterError("lattice points must be >= 1");
    if (!(L > 0.0)) throw ParameterError("lattice length must be > 0");
    spacing = L / n;
}

Field field_constant(int nx, int ny, double c) { return Field(nx, ny, c); }

double sup_norm(const Field& f) {
    double m = 0.0;
    for (double x : f.data()) m = std::max(m, std::fabs(x));
    return m;
}

double mass(const Field& f, double h) {
    if (!(h > 0.0)) throw ParameterError("mass: spacing h must be > 0");
    double s = 0.0;
    for (double x : f.data()) s += x;
    return h * h * s;
}

double min_entry(const Field& f) {
    double m = f.data()[0];
    for (double x : f.data()) m = std::min(m, x);
    return m;
}

void require_same_shape(const Field& a, const Field& b, const char* where) {
    if (!a.same_shape(b)) {
        throw DimensionError(std::string(where) + ": field dimensions differ (" +
                             std::to_string(a.nx()) + "x" + std::to_string(a.ny()) + " vs " +
                             std::to_string(b.nx()) + "x" + std::to_string(b.ny()) + ")");
    }
}

} // namespace gs
