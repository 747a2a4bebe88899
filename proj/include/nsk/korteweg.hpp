#pragma once

#include "nsk/constitutive.hpp"
#include "nsk/field.hpp"

namespace nsk {

/// Both faces of the capillary stress for one density field.
struct KortewegOutput {
    TensorField tensor;      // K_ij, symmetric
    VectorField force;       // div K
    double capillary_energy; // int 1/2 kappa(rho) |grad rho|^2
};

/// div K in the primitive divergence form,
///   grad(rho kappa Delta rho + 1/2 (kappa + rho kappa') |grad rho|^2)
///   - div(kappa grad rho x grad rho).
VectorField div_k_primitive(const ScalarField& rho, const CapillarityModel& model);

/// The rewritten tensor
///   K_ij = (Delta B(rho) - c(rho) |grad A(rho)|^2) delta_ij
///          - d_i A(rho) d_j A(rho),
/// with c = (kappa + rho kappa') / (2 kappa); all derivatives fall on the
/// sampled A and B fields, an independent route from div_k_primitive.
TensorField korteweg_tensor(const ScalarField& rho, const CapillarityModel& model);

KortewegOutput korteweg_output(const ScalarField& rho,
                               const CapillarityModel& model);

double capillary_energy(const ScalarField& rho, const CapillarityModel& model);

/// Relative L^2 mismatch between divergence(korteweg_tensor) and
/// div_k_primitive; 0 for constant density.
double equivalence_residual(const ScalarField& rho, const CapillarityModel& model);

/// Both sides of the capillary power identity: work integrates against the
/// analytic time derivative of the gradient energy under d_t rho = -div(rho u).
struct CapillaryPowerCheck {
    double work;      // int div K . u dx
    double energy_dt; // d/dt int 1/2 kappa |grad rho|^2, expanded analytically
    double residual() const { return work + energy_dt; }
    double scale() const { return std::max(std::abs(work), std::abs(energy_dt)); }
};

CapillaryPowerCheck capillary_power_check(const ScalarField& rho,
                                          const VectorField& u,
                                          const CapillarityModel& model);

/// |work + energy_dt| / max(scale, tiny); 0 when both sides vanish.
double capillary_power_residual(const ScalarField& rho, const VectorField& u,
                                const CapillarityModel& model);

} // namespace nsk
