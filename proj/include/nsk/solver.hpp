#pragma once

#include "nsk/config.hpp"
#include "nsk/constitutive.hpp"
#include "nsk/field.hpp"

namespace nsk {

/// Conservative unknowns (rho, m = rho u) at one instant.
struct FlowState {
    ScalarField rho;
    VectorField momentum;
    double time = 0.0;

    explicit FlowState(const Grid& g) : rho(g), momentum(g) {}

    VectorField velocity() const {
        VectorField u(rho.grid);
        for (int i = 0; i < rho.grid.dim(); ++i)
            u[i].v = momentum[i].v / rho.v;
        return u;
    }

    bool all_finite() const { return rho.all_finite() && momentum.all_finite(); }
};

/// The constitutive closure of one run.
struct FlowModels {
    PressureLaw pressure;
    ViscosityModel viscosity;
    CapillarityModel capillarity;
    double rho_floor;

    static FlowModels from_config(const SimulationConfig& c) {
        return {c.pressure_law(), c.viscosity_model(), c.capillarity_model(),
                c.effective_rho_floor()};
    }
};

/// External source terms added to the conservative right-hand side.
struct Forcing {
    virtual ~Forcing() = default;
    virtual void add(double t, ScalarField& drho, VectorField& dmom) const = 0;
};

struct RhsEval {
    ScalarField drho;
    VectorField dmom;
    double dissipation_a29;   // int 2 mu |D(u)|^2 + lambda (div u)^2
    double dissipation_ineq1; // int mu |D(u)|^2 + (mu + lambda) (div u)^2
};

/// Conservative right-hand side of the capillary system; throws
/// VacuumApproached when min rho < rho_floor. Outputs are dealiased.
RhsEval compute_rhs(const FlowState& state, const FlowModels& models,
                    const Forcing* forcing = nullptr);

/// Advective, viscous and dispersive step limits combined:
///   dt = cfl * min( dx / max(|u| + sqrt(P'(rho))),
///                   rho_min dx^2 / (4 (2 mu + |lambda|)_max),
///                   dx^2 / (2 pi sqrt((rho kappa(rho))_max)) ).
double stable_timestep(const FlowState& state, const FlowModels& models,
                       double cfl);

/// Cumulative dissipation integrals carried alongside the state; advance()
/// integrates them with the same Runge-Kutta weights as the fields so the
/// energy budget converges at the scheme order.
struct StepAccumulators {
    double dissipation_a29 = 0.0;
    double dissipation_ineq1 = 0.0;
};

/// Classical four-stage Runge-Kutta update; dealiasing is applied through the
/// stage right-hand sides. VacuumApproached aborts the step.
FlowState advance(const FlowState& state, double dt, const FlowModels& models,
                  StepAccumulators* acc = nullptr,
                  const Forcing* forcing = nullptr);

} // namespace nsk
