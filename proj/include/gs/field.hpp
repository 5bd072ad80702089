#pragma once
#include <span>
#include <vector>

#include "gs/errors.hpp"

namespace gs {

/// Periodic 2-D scalar field, row-major: entry (i,j) lives at data[i*ny + j].
/// Indices wrap, so (i+nx, j) and (i, j) read the same cell.
class Field {
public:
    Field() = default;
    Field(int nx, int ny, double fill = 0.0);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return data_.size(); }

    /// Wrapped access; valid for any integer pair.
    double operator()(int i, int j) const { return data_[offset(i, j)]; }
    double& operator()(int i, int j) { return data_[offset(i, j)]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }
    const double* raw() const { return data_.data(); }
    double* raw() { return data_.data(); }

    bool same_shape(const Field& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_;
    }

private:
    std::size_t offset(int i, int j) const {
        const int iw = wrap(i, nx_);
        const int jw = wrap(j, ny_);
        return static_cast<std::size_t>(iw) * ny_ + jw;
    }
    static int wrap(int k, int n) {
        const int m = k % n;
        return m < 0 ? m + n : m;
    }

    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> data_;
};

/// Square periodic lattice [0,L]^2 sampled at n points per side, h = L/n.
struct LatticeSpec {
    double length = 0.0;
    int points = 0;
    double spacing = 0.0;

    LatticeSpec() = default;
    LatticeSpec(double L, int n);

    double area() const { return length * length; }
    bool operator==(const LatticeSpec&) const = default;
};

Field field_constant(int nx, int ny, double c);

/// max_ij |f(i,j)|
double sup_norm(const Field& f);

/// Discrete integral h^2 * sum of entries.
double mass(const Field& f, double h);

double min_entry(const Field& f);

void require_same_shape(const Field& a, const Field& b, const char* where);

} // namespace gs
