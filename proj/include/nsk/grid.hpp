#pragma once

#include <array>

#include "nsk/errors.hpp"

namespace nsk {

/// Uniform periodic grid on [0,L)^dim with n nodes per dimension.
///
/// Nodes sit at x_i = i*L/n. n must be a power of two so that all spectral
/// transforms run through the radix-2 path.
class Grid {
  public:
    Grid(int dim, int n, double length) : dim_(dim), n_(n), length_(length) {
        if (dim != 1 && dim != 2)
            throw ValidationError("Grid: dim must be 1 or 2");
        if (n < 8)
            throw ValidationError("Grid: n must be >= 8");
        if ((n & (n - 1)) != 0)
            throw ValidationError("Grid: n must be a power of two");
        if (!(length > 0.0))
            throw ValidationError("Grid: length must be positive");
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double length() const { return length_; }

    /// Total node count n^dim.
    int size() const { return dim_ == 1 ? n_ : n_ * n_; }

    double dx() const { return length_ / n_; }
    double cell_volume() const { return dim_ == 1 ? dx() : dx() * dx(); }
    double volume() const { return dim_ == 1 ? length_ : length_ * length_; }

    double coord(int i) const { return i * dx(); }

    /// Flat index, x fastest.
    int index(int ix, int iy = 0) const { return ix + n_ * iy; }

    std::array<double, 2> node(int flat) const {
        if (dim_ == 1) return {coord(flat), 0.0};
        return {coord(flat % n_), coord(flat / n_)};
    }

    /// Shortest periodic displacement a-b along one axis.
    double periodic_delta(double a, double b) const {
        double d = a - b;
        while (d > 0.5 * length_) d -= length_;
        while (d < -0.5 * length_) d += length_;
        return d;
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && length_ == o.length_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

  private:
    int dim_;
    int n_;
    double length_;
};

} // namespace nsk
