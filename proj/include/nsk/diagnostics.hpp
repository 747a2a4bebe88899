#pragma once

#include <array>
#include <string>
#include <vector>

#include "nsk/series.hpp"
#include "nsk/solver.hpp"
#include "nsk/test_function.hpp"

namespace nsk {

// -- pointwise energies --------------------------------------------------------

/// E(t) = int ( 1/2 rho |u|^2 + (Pi(rho) - Pi(rho_bar)) + 1/2 kappa |grad rho|^2 ).
double total_energy(const FlowState& state, const PressureLaw& pressure,
                    const CapillarityModel& capillarity);

/// Same with a j_gamma / (gamma - 1) in place of the Pi term.
double gamma_energy(const FlowState& state, const PressureLaw& pressure,
                    const CapillarityModel& capillarity);

/// 1/2 int psi ( rho|u|^2 + kappa|grad rho|^2 + 2 Pi(rho) - 2 Pi(rho_bar) ).
double localized_energy(const FlowState& state, const ScalarField& psi,
                        const PressureLaw& pressure,
                        const CapillarityModel& capillarity);
double localized_energy(const FlowState& state, const TestFunctionSpec& psi,
                        const PressureLaw& pressure,
                        const CapillarityModel& capillarity);

// -- budgets over retained trajectories -----------------------------------------

/// r(t_i) = E(t_i) + int_0^{t_i} Dissipation - E(0) from the recorded series.
std::vector<double> energy_budget(const DiagnosticsSeries& series);

/// Localized budget against the commutator integrals of the localized energy
/// identity (kinetic transport, viscous fluxes, pressure/potential flux and
/// the four capillary commutators); psi derivatives are analytic.
std::vector<double> localized_budget(const std::vector<FlowState>& states,
                                     const TestFunctionSpec& psi,
                                     const FlowModels& models);

// -- space-time gain norms -------------------------------------------------------

/// Integrand ||phi B(rho)||^2_{H^{1 + s/2}} of the gain norm at one instant.
double gain_norm_integrand(const FlowState& state, const ScalarField& phi,
                           double s, const CapillarityModel& model);

/// ( int_0^T ||phi B(rho(t))||^2_{H^{1+s/2}} dt )^{1/2} by trapezoidal
/// quadrature over the retained trajectory. Throws SRangeViolation outside
/// s in [0,2) (2D) or [0,1/2) (1D).
double gain_norm(const std::vector<FlowState>& states,
                 const TestFunctionSpec& phi, double s,
                 const CapillarityModel& model);

void check_s_range(double s, int dim);

struct IntegrabilityGain {
    double density_norm;     // int int |phi rho|^{gamma+alpha} dx dt
    double weighted_gradient; // int int rho^{alpha-2} |grad rho|^2 dx dt
};

/// Instantaneous integrands of both critical-capillarity gains.
std::array<double, 2> integrability_integrands(const FlowState& state,
                                               const ScalarField& phi,
                                               double alpha_gain,
                                               const PressureLaw& pressure);

/// Space-time gains of the critical model; requires a Critical capillarity
/// model and alpha_gain > 0.
IntegrabilityGain integrability_gain(const std::vector<FlowState>& states,
                                     const TestFunctionSpec& phi,
                                     double alpha_gain,
                                     const PressureLaw& pressure,
                                     const CapillarityModel& model);

// -- concentration ---------------------------------------------------------------

struct ConcentrationScan {
    double max_value;                  // max_x ||1_{B(x,r)} grad A(rho)||_{L^2}
    std::array<double, 2> argmax;      // center achieving it
};

/// Ball scan over every grid-centered ball of radius r; the indicator is
/// sharp and applied in physical space (evaluated through a circular
/// convolution, which matches the direct node sum exactly).
ConcentrationScan concentration_scan(const FlowState& state, double r,
                                     const CapillarityModel& model);

// -- residual checks over retained trajectories ----------------------------------

/// Renormalized-equation residual for b = B(rho):
///   d_t(phi B) + div(phi B u) + phi (rho B' - B) div u - r_phi,
/// r_phi = B u . grad phi, with the time derivative reconstructed by centered
/// differences on the trajectory. Entry i is the relative L^2 residual at
/// t_i (endpoints 0).
std::vector<double> renormalized_residual(const std::vector<FlowState>& states,
                                          const TestFunctionSpec& phi,
                                          const CapillarityModel& model);

struct WeakFormEntry {
    std::string name;
    double residual;   // absolute value of the weak-form pairing
    double scale;      // largest contributing term magnitude
    double relative() const { return scale > 0 ? residual / scale : residual; }
};

struct WeakFormReport {
    std::vector<WeakFormEntry> mass;
    std::vector<WeakFormEntry> momentum;
    double initial_trace_mass;      // |int rho(t1) phi - int rho0 phi|
    double initial_trace_momentum;  // same for the momentum components
    double max_relative() const;
};

/// Mass/momentum weak-form residuals over a battery of smooth space-time test
/// functions (trigonometric in space, all K derivatives moved onto the test),
/// plus the initial-trace errors at the first retained instant.
WeakFormReport weak_form_residual(const std::vector<FlowState>& states,
                                  const FlowModels& models);

// -- theorem-shaped summaries -----------------------------------------------------

struct LargeKappaReport {
    double constant;        // smallest admissible C, clamped to >= 1
    double sup_grad_A;      // sup_t ||grad A(rho)||_{L^2}
    double init_grad_A;     // ||grad A(rho_0)||_{L^2}
    double kinetic_term;    // ||sqrt(rho_0) u_0||_{L^2}
    double pressure_term;   // sup_t ||rho||_{L^gamma}^{gamma/2}
};

LargeKappaReport large_kappa_check(const std::vector<FlowState>& states,
                                   const PressureLaw& pressure,
                                   const CapillarityModel& model);

struct OrliczEnergyReport {
    double sup_orlicz; // sup_t ||rho - rho_bar||_{L^gamma_2}
    double sup_h1;     // sup_t ||rho - rho_bar||_{H^1}
    double rho_min;
    double rho_max;
};

OrliczEnergyReport orlicz_energy_check(const std::vector<FlowState>& states,
                                       const PressureLaw& pressure,
                                       double delta = 1.0);

} // namespace nsk
