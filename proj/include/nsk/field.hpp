#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "nsk/grid.hpp"

namespace nsk {

/// Real samples of a scalar quantity at the grid nodes.
struct ScalarField {
    Grid grid;
    Eigen::ArrayXd v;

    explicit ScalarField(const Grid& g)
        : grid(g), v(Eigen::ArrayXd::Zero(g.size())) {}

    ScalarField(const Grid& g, Eigen::ArrayXd values)
        : grid(g), v(std::move(values)) {
        if (static_cast<int>(v.size()) != g.size())
            throw ValidationError("ScalarField: value count does not match grid");
    }

    double& operator()(int ix, int iy = 0) { return v[grid.index(ix, iy)]; }
    double operator()(int ix, int iy = 0) const { return v[grid.index(ix, iy)]; }

    bool all_finite() const { return v.isFinite().all(); }

    /// Sample f(x) (1D) or f(x,y) (2D) at the nodes.
    static ScalarField sample(const Grid& g,
                              const std::function<double(double, double)>& f) {
        ScalarField out(g);
        if (g.dim() == 1) {
            for (int i = 0; i < g.n(); ++i) out.v[i] = f(g.coord(i), 0.0);
        } else {
            for (int iy = 0; iy < g.n(); ++iy)
                for (int ix = 0; ix < g.n(); ++ix)
                    out.v[g.index(ix, iy)] = f(g.coord(ix), g.coord(iy));
        }
        return out;
    }

    static ScalarField constant(const Grid& g, double c) {
        ScalarField out(g);
        out.v.setConstant(c);
        return out;
    }
};

/// dim scalar components sharing one grid.
struct VectorField {
    Grid grid;
    std::vector<ScalarField> comp;

    explicit VectorField(const Grid& g) : grid(g), comp(g.dim(), ScalarField(g)) {}

    ScalarField& operator[](int i) { return comp[i]; }
    const ScalarField& operator[](int i) const { return comp[i]; }
    int dim() const { return grid.dim(); }

    bool all_finite() const {
        for (const auto& c : comp)
            if (!c.all_finite()) return false;
        return true;
    }
};

/// dim x dim scalar components sharing one grid; (i,j) is row i, column j.
struct TensorField {
    Grid grid;
    std::vector<ScalarField> comp;

    explicit TensorField(const Grid& g)
        : grid(g), comp(g.dim() * g.dim(), ScalarField(g)) {}

    ScalarField& operator()(int i, int j) { return comp[i * grid.dim() + j]; }
    const ScalarField& operator()(int i, int j) const {
        return comp[i * grid.dim() + j];
    }
    int dim() const { return grid.dim(); }

    double max_asymmetry() const {
        double m = 0.0;
        for (int i = 0; i < dim(); ++i)
            for (int j = i + 1; j < dim(); ++j)
                m = std::max(m,
                             ((*this)(i, j).v - (*this)(j, i).v).abs().maxCoeff());
        return m;
    }
};

} // namespace nsk
