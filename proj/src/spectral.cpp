#include "nsk/spectral.hpp"

#include <cmath>
#include <vector>

namespace nsk {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Applies m(xi_x, xi_y, is_nyquist_x, is_nyquist_y) modewise.
template <class Fn>
ScalarField apply_multiplier(const ScalarField& f, Fn&& m) {
    const Grid& g = f.grid;
    const int n = g.n();
    const double k0 = 2.0 * kPi / g.length();
    Eigen::ArrayXcd spec = forward_transform(g, f.v);
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j) {
            double xi = k0 * fft::mode_of(j, n);
            spec[j] *= m(xi, 0.0, j == n / 2, false);
        }
    } else {
        for (int jy = 0; jy < n; ++jy) {
            double xiy = k0 * fft::mode_of(jy, n);
            for (int jx = 0; jx < n; ++jx) {
                double xix = k0 * fft::mode_of(jx, n);
                spec[jx + n * jy] *= m(xix, xiy, jx == n / 2, jy == n / 2);
            }
        }
    }
    return ScalarField(g, inverse_transform_real(g, spec));
}

double mean_tolerance(const ScalarField& f) {
    return 1e-10 * (1.0 + f.v.abs().maxCoeff());
}

} // namespace

ScalarField derivative(const ScalarField& f, int axis) {
    return apply_multiplier(f, [axis](double xx, double xy, bool nyx, bool nyy) {
        double xi = axis == 0 ? xx : xy;
        bool ny = axis == 0 ? nyx : nyy;
        return ny ? Complex(0.0, 0.0) : Complex(0.0, xi);
    });
}

VectorField gradient(const ScalarField& f) {
    VectorField out(f.grid);
    for (int i = 0; i < f.grid.dim(); ++i) out[i] = derivative(f, i);
    return out;
}

ScalarField divergence(const VectorField& v) {
    ScalarField out = derivative(v[0], 0);
    for (int i = 1; i < v.dim(); ++i) out.v += derivative(v[i], i).v;
    return out;
}

VectorField divergence(const TensorField& t) {
    VectorField out(t.grid);
    for (int i = 0; i < t.dim(); ++i) {
        ScalarField s = derivative(t(i, 0), 0);
        for (int j = 1; j < t.dim(); ++j) s.v += derivative(t(i, j), j).v;
        out[i] = std::move(s);
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    return apply_multiplier(f, [](double xx, double xy, bool, bool) {
        return Complex(-(xx * xx + xy * xy), 0.0);
    });
}

TensorField gradient(const VectorField& u) {
    TensorField out(u.grid);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.dim(); ++j) out(i, j) = derivative(u[i], j);
    return out;
}

ScalarField fractional_power(const ScalarField& f, double s) {
    if (s == 0.0) return f;
    if (s < 0.0 && std::abs(mean(f)) > mean_tolerance(f))
        throw NegativePowerOnMean("Lambda^s with s<0 requires a zero-mean field");
    return apply_multiplier(f, [s](double xx, double xy, bool, bool) {
        double k2 = xx * xx + xy * xy;
        if (k2 == 0.0) return Complex(0.0, 0.0);
        return Complex(std::pow(k2, 0.5 * s), 0.0);
    });
}

ScalarField riesz(const ScalarField& f, int axis) {
    return apply_multiplier(f, [axis](double xx, double xy, bool, bool) {
        double k = std::sqrt(xx * xx + xy * xy);
        if (k == 0.0) return Complex(0.0, 0.0);
        double xi = axis == 0 ? xx : xy;
        return Complex(0.0, xi / k);
    });
}

ScalarField inverse_laplacian(const ScalarField& f) {
    if (std::abs(mean(f)) > mean_tolerance(f))
        throw NonZeroMean("inverse_laplacian requires a zero-mean field");
    return apply_multiplier(f, [](double xx, double xy, bool, bool) {
        double k2 = xx * xx + xy * xy;
        if (k2 == 0.0) return Complex(0.0, 0.0);
        return Complex(-1.0 / k2, 0.0);
    });
}

ScalarField dealias(const ScalarField& f) {
    const int cut = f.grid.n() / 3;
    Eigen::ArrayXcd spec = forward_transform(f.grid, f.v);
    const int n = f.grid.n();
    if (f.grid.dim() == 1) {
        for (int j = 0; j < n; ++j)
            if (std::abs(fft::mode_of(j, n)) > cut) spec[j] = 0.0;
    } else {
        for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx)
                if (std::abs(fft::mode_of(jx, n)) > cut ||
                    std::abs(fft::mode_of(jy, n)) > cut)
                    spec[jx + n * jy] = 0.0;
    }
    return ScalarField(f.grid, inverse_transform_real(f.grid, spec));
}

void dealias_in_place(ScalarField& f) { f = dealias(f); }

void dealias_in_place(VectorField& v) {
    for (int i = 0; i < v.dim(); ++i) dealias_in_place(v[i]);
}

double integral(const ScalarField& f) { return f.v.sum() * f.grid.cell_volume(); }

double mean(const ScalarField& f) { return f.v.mean(); }

double inner(const ScalarField& a, const ScalarField& b) {
    return (a.v * b.v).sum() * a.grid.cell_volume();
}

double l2_norm(const ScalarField& f) {
    return std::sqrt((f.v * f.v).sum() * f.grid.cell_volume());
}

double linf_norm(const ScalarField& f) { return f.v.abs().maxCoeff(); }

double lp_norm(const ScalarField& f, double p) {
    if (std::isinf(p)) return linf_norm(f);
    return std::pow(f.v.abs().pow(p).sum() * f.grid.cell_volume(), 1.0 / p);
}

double modal_energy(const ScalarField& f) {
    Eigen::ArrayXcd spec = forward_transform(f.grid, f.v);
    double s = (spec * spec.conjugate()).real().sum();
    double N = static_cast<double>(f.grid.size());
    return s / N * f.grid.cell_volume();
}

double sobolev_norm(const ScalarField& f, double s, bool homogeneous) {
    if (homogeneous) {
        if (s < 0.0) return l2_norm(fractional_power(f, s));
        ScalarField g = f;
        g.v -= mean(f);
        return l2_norm(fractional_power(g, s));
    }
    ScalarField g = f;
    if (s < 0.0) g.v -= mean(f);
    double hs = l2_norm(fractional_power(g, s));
    double l2 = l2_norm(f);
    return std::sqrt(l2 * l2 + hs * hs);
}

double besov_norm(const ScalarField& f, double s, double p, double q) {
    const Grid& g = f.grid;
    const int n = g.n();
    const double k0 = 2.0 * kPi / g.length();
    Eigen::ArrayXcd spec = forward_transform(g, f.v);

    // |xi| per flat spectral index
    std::vector<double> kabs(g.size());
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j) kabs[j] = std::abs(k0 * fft::mode_of(j, n));
    } else {
        for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx) {
                double xx = k0 * fft::mode_of(jx, n);
                double yy = k0 * fft::mode_of(jy, n);
                kabs[jx + n * jy] = std::sqrt(xx * xx + yy * yy);
            }
    }
    double kmax = 0.0;
    for (double k : kabs) kmax = std::max(kmax, k);
    int jmax = 0;
    while (std::pow(2.0, jmax + 1) <= kmax) ++jmax;

    double sum = 0.0;
    double sup = 0.0;
    for (int j = -1; j <= jmax; ++j) {
        double lo = j < 0 ? 0.0 : std::pow(2.0, j);
        double hi = j < 0 ? 1.0 : std::pow(2.0, j + 1);
        Eigen::ArrayXcd block = spec;
        bool any = false;
        for (int i = 0; i < g.size(); ++i) {
            bool in = j < 0 ? kabs[i] < hi : (kabs[i] >= lo && kabs[i] < hi);
            if (!in)
                block[i] = 0.0;
            else if (block[i] != Complex(0.0, 0.0))
                any = true;
        }
        if (!any) continue;
        ScalarField piece(g, inverse_transform_real(g, block));
        double bn = lp_norm(piece, p);
        double w = std::pow(2.0, j * s);
        if (std::isinf(q))
            sup = std::max(sup, w * bn);
        else
            sum += std::pow(w * bn, q);
    }
    if (std::isinf(q)) return sup;
    return std::pow(sum, 1.0 / q);
}

} // namespace nsk
