#include "nsk/test_function.hpp"

#include <cmath>

#include "nsk/errors.hpp"

namespace nsk {

void TestFunctionSpec::check(const Grid& g) const {
    if (!(radius > 0)) throw ValidationError("test function: radius must be positive");
    if (!(radius < 0.5 * g.length()))
        throw ValidationError(
            "test function: support must fit strictly inside the domain");
    if (order < 2) throw ValidationError("test function: order must be >= 2");
}

double TestFunctionSpec::value(const Grid& g, double x, double y) const {
    double dx = g.periodic_delta(x, center[0]);
    double dy = g.dim() == 2 ? g.periodic_delta(y, center[1]) : 0.0;
    double t = 1.0 - (dx * dx + dy * dy) / (radius * radius);
    if (t <= 0.0) return 0.0;
    return std::pow(t, order);
}

std::array<double, 2> TestFunctionSpec::grad(const Grid& g, double x,
                                             double y) const {
    double dx = g.periodic_delta(x, center[0]);
    double dy = g.dim() == 2 ? g.periodic_delta(y, center[1]) : 0.0;
    double r2 = radius * radius;
    double t = 1.0 - (dx * dx + dy * dy) / r2;
    if (t <= 0.0) return {0.0, 0.0};
    double f = -2.0 * order * std::pow(t, order - 1) / r2;
    return {f * dx, f * dy};
}

std::array<double, 3> TestFunctionSpec::hessian(const Grid& g, double x,
                                                double y) const {
    double dx = g.periodic_delta(x, center[0]);
    double dy = g.dim() == 2 ? g.periodic_delta(y, center[1]) : 0.0;
    double r2 = radius * radius;
    double t = 1.0 - (dx * dx + dy * dy) / r2;
    if (t <= 0.0) return {0.0, 0.0, 0.0};
    double tm1 = std::pow(t, order - 1);
    double tm2 = std::pow(t, order - 2);
    double quad = 4.0 * order * (order - 1) * tm2 / (r2 * r2);
    double lin = -2.0 * order * tm1 / r2;
    return {quad * dx * dx + lin, quad * dx * dy, quad * dy * dy + lin};
}

ScalarField sample(const TestFunctionSpec& spec, const Grid& g) {
    spec.check(g);
    return ScalarField::sample(
        g, [&](double x, double y) { return spec.value(g, x, y); });
}

VectorField sample_grad(const TestFunctionSpec& spec, const Grid& g) {
    spec.check(g);
    VectorField out(g);
    for (int flat = 0; flat < g.size(); ++flat) {
        auto [x, y] = g.node(flat);
        auto gr = spec.grad(g, x, y);
        for (int i = 0; i < g.dim(); ++i) out[i].v[flat] = gr[i];
    }
    return out;
}

double Region::min_extent(const Grid& g) const {
    if (whole) return g.length();
    double m = hi[0] - lo[0];
    if (g.dim() == 2) m = std::min(m, hi[1] - lo[1]);
    return m;
}

bool Region::contains(const Grid& g, double x, double y) const {
    if (whole) return true;
    if (x < lo[0] || x > hi[0]) return false;
    if (g.dim() == 2 && (y < lo[1] || y > hi[1])) return false;
    return true;
}

bool Region::meets_ball(const Grid& g, const std::array<double, 2>& c,
                        double r) const {
    if (whole) return true;
    // distance from the ball center to the box, per axis with periodicity
    double d2 = 0.0;
    for (int i = 0; i < g.dim(); ++i) {
        double mid = 0.5 * (lo[i] + hi[i]);
        double half = 0.5 * (hi[i] - lo[i]);
        double d = std::abs(g.periodic_delta(c[i], mid)) - half;
        if (d > 0) d2 += d * d;
    }
    return d2 <= r * r;
}

PartitionOfUnity::PartitionOfUnity(const Grid& g, const Region& region,
                                   double lambda, int order)
    : grid_(g), region_(region), lambda_(lambda) {
    // Lattice spacing so the farthest point sits at 0.8 lambda from a center.
    double target = 1.6 * lambda / std::sqrt(static_cast<double>(g.dim()));
    int m = std::max(2, static_cast<int>(std::ceil(g.length() / target)));
    double h = g.length() / m;
    if (g.dim() == 1) {
        for (int i = 0; i < m; ++i)
            bumps_.push_back({{(i + 0.5) * h, 0.0}, lambda, order});
    } else {
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix)
                bumps_.push_back(
                    {{(ix + 0.5) * h, (iy + 0.5) * h}, lambda, order});
    }
    for (int k = 0; k < static_cast<int>(bumps_.size()); ++k)
        if (region_.meets_ball(g, bumps_[k].center, lambda)) active_.push_back(k);
}

double PartitionOfUnity::weight_sum(double x, double y,
                                    std::array<double, 2>* grad_s,
                                    std::array<double, 3>* hess_s) const {
    double s = 0.0;
    if (grad_s) *grad_s = {0.0, 0.0};
    if (hess_s) *hess_s = {0.0, 0.0, 0.0};
    for (const auto& b : bumps_) {
        double w = b.value(grid_, x, y);
        if (w == 0.0) continue;
        s += w;
        if (grad_s) {
            auto gw = b.grad(grid_, x, y);
            (*grad_s)[0] += gw[0];
            (*grad_s)[1] += gw[1];
        }
        if (hess_s) {
            auto hw = b.hessian(grid_, x, y);
            for (int i = 0; i < 3; ++i) (*hess_s)[i] += hw[i];
        }
    }
    return s;
}

double PartitionOfUnity::value(int k, double x, double y) const {
    double w = member(k).value(grid_, x, y);
    if (w == 0.0) return 0.0;
    return w / weight_sum(x, y, nullptr, nullptr);
}

std::array<double, 2> PartitionOfUnity::grad(int k, double x, double y) const {
    double w = member(k).value(grid_, x, y);
    if (w == 0.0) return {0.0, 0.0};
    std::array<double, 2> gs{};
    double s = weight_sum(x, y, &gs, nullptr);
    auto gw = member(k).grad(grid_, x, y);
    double phi = w / s;
    return {(gw[0] - phi * gs[0]) / s, (gw[1] - phi * gs[1]) / s};
}

std::array<double, 3> PartitionOfUnity::hessian(int k, double x, double y) const {
    double w = member(k).value(grid_, x, y);
    if (w == 0.0) return {0.0, 0.0, 0.0};
    std::array<double, 2> gs{};
    std::array<double, 3> hs{};
    double s = weight_sum(x, y, &gs, &hs);
    auto gw = member(k).grad(grid_, x, y);
    auto hw = member(k).hessian(grid_, x, y);
    double phi = w / s;
    std::array<double, 2> gphi = {(gw[0] - phi * gs[0]) / s,
                                  (gw[1] - phi * gs[1]) / s};
    return {(hw[0] - phi * hs[0] - 2.0 * gphi[0] * gs[0]) / s,
            (hw[1] - phi * hs[1] - gphi[0] * gs[1] - gphi[1] * gs[0]) / s,
            (hw[2] - phi * hs[2] - 2.0 * gphi[1] * gs[1]) / s};
}

ScalarField PartitionOfUnity::sample_member(int k) const {
    return ScalarField::sample(
        grid_, [&](double x, double y) { return value(k, x, y); });
}

ScalarField PartitionOfUnity::sample_sum() const {
    ScalarField out(grid_);
    for (int k = 0; k < size(); ++k) out.v += sample_member(k).v;
    return out;
}

double PartitionOfUnity::max_grad_norm(int k, int refine) const {
    const int n = grid_.n() * refine;
    double h = grid_.length() / n;
    double best = 0.0;
    if (grid_.dim() == 1) {
        for (int i = 0; i < n; ++i) {
            auto gr = grad(k, i * h);
            best = std::max(best, std::abs(gr[0]));
        }
    } else {
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                auto gr = grad(k, ix * h, iy * h);
                best = std::max(best, std::hypot(gr[0], gr[1]));
            }
    }
    return best;
}

double PartitionOfUnity::max_hessian_norm(int k, int refine) const {
    const int n = grid_.n() * refine;
    double h = grid_.length() / n;
    double best = 0.0;
    if (grid_.dim() == 1) {
        for (int i = 0; i < n; ++i)
            best = std::max(best, std::abs(hessian(k, i * h)[0]));
    } else {
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                auto hv = hessian(k, ix * h, iy * h);
                best = std::max(best, std::max({std::abs(hv[0]), std::abs(hv[1]),
                                                std::abs(hv[2])}));
            }
    }
    return best;
}

PartitionOfUnity partition_of_unity(const Grid& g, const Region& region,
                                    double lambda_radius, int order) {
    if (!(lambda_radius > 0))
        throw RadiusTooLarge("partition: lambda must be positive");
    if (lambda_radius >= 0.5 * g.length())
        throw RadiusTooLarge("partition: lambda exceeds half the period");
    if (lambda_radius >= region.min_extent(g))
        throw RadiusTooLarge("partition: lambda exceeds the region size");
    return PartitionOfUnity(g, region, lambda_radius, order);
}

} // namespace nsk
