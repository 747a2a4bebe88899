#pragma once

#include <array>
#include <vector>

#include "nsk/field.hpp"

namespace nsk {

/// Compactly supported polynomial bump: (1 - r^2/lambda^2)^order inside the
/// periodic ball of radius lambda, zero outside. order >= 2 keeps the
/// gradient continuous; the default order 4 is C^3.
struct TestFunctionSpec {
    std::array<double, 2> center = {0.0, 0.0};
    double radius = 1.0;
    int order = 4;

    double value(const Grid& g, double x, double y = 0.0) const;
    std::array<double, 2> grad(const Grid& g, double x, double y = 0.0) const;
    /// Hessian entries {xx, xy, yy}.
    std::array<double, 3> hessian(const Grid& g, double x, double y = 0.0) const;

    void check(const Grid& g) const; // support strictly inside the domain
};

ScalarField sample(const TestFunctionSpec& spec, const Grid& g);
VectorField sample_grad(const TestFunctionSpec& spec, const Grid& g);

/// Axis-aligned box on the torus, or the whole domain.
struct Region {
    bool whole = true;
    std::array<double, 2> lo = {0.0, 0.0};
    std::array<double, 2> hi = {0.0, 0.0};

    static Region whole_domain() { return Region{}; }
    static Region box(std::array<double, 2> lo, std::array<double, 2> hi) {
        return Region{false, lo, hi};
    }

    double min_extent(const Grid& g) const;
    bool contains(const Grid& g, double x, double y) const;
    bool meets_ball(const Grid& g, const std::array<double, 2>& c,
                    double r) const;
};

/// Normalized bump family phi_k = w_k / sum_j w_j over a lattice covering the
/// torus. Members are exact zero outside B(x_k, lambda); the normalizer is
/// bounded away from zero everywhere, so each phi_k inherits the bump
/// smoothness and the family sums to one identically. The returned members
/// are those whose support meets the region, which is enough for the sum to
/// equal one on the region itself.
class PartitionOfUnity {
  public:
    PartitionOfUnity(const Grid& g, const Region& region, double lambda,
                     int order);

    int size() const { return static_cast<int>(active_.size()); }
    double lambda() const { return lambda_; }
    const Region& region() const { return region_; }
    const TestFunctionSpec& member(int k) const {
        return bumps_[active_[k]];
    }

    double value(int k, double x, double y = 0.0) const;
    std::array<double, 2> grad(int k, double x, double y = 0.0) const;
    std::array<double, 3> hessian(int k, double x, double y = 0.0) const;

    ScalarField sample_member(int k) const;
    /// Sum of the active members on the grid.
    ScalarField sample_sum() const;

    /// max over a refined point set of |grad phi_k| and of the Hessian entries.
    double max_grad_norm(int k, int refine = 2) const;
    double max_hessian_norm(int k, int refine = 2) const;

  private:
    double weight_sum(double x, double y, std::array<double, 2>* grad_s,
                      std::array<double, 3>* hess_s) const;

    Grid grid_;
    Region region_;
    double lambda_;
    std::vector<TestFunctionSpec> bumps_; // full covering lattice
    std::vector<int> active_;             // members meeting the region
};

/// Lattice partition subordinate to balls of radius lambda_radius. Throws
/// RadiusTooLarge when lambda does not fit the region or the torus.
PartitionOfUnity partition_of_unity(const Grid& g, const Region& region,
                                    double lambda_radius, int order = 4);

} // namespace nsk
