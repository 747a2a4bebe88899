#include "nsk/config.hpp"

#include "nsk/errors.hpp"

namespace nsk {

ScenarioId parse_scenario_id(const std::string& s) {
    if (s == "small-data-2d") return ScenarioId::SmallData2D;
    if (s == "large-data-1d") return ScenarioId::LargeData1D;
    if (s == "vacuum-approach") return ScenarioId::VacuumApproach;
    if (s == "large-kappa") return ScenarioId::LargeKappa;
    if (s == "critical-capillarity") return ScenarioId::CriticalCapillarity;
    if (s == "manufactured") return ScenarioId::Manufactured;
    throw ValidationError("unknown scenario id: " + s);
}

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::SmallData2D: return "small-data-2d";
        case ScenarioId::LargeData1D: return "large-data-1d";
        case ScenarioId::VacuumApproach: return "vacuum-approach";
        case ScenarioId::LargeKappa: return "large-kappa";
        case ScenarioId::CriticalCapillarity: return "critical-capillarity";
        case ScenarioId::Manufactured: return "manufactured";
    }
    return "unknown";
}

CapillarityModel SimulationConfig::capillarity_model() const {
    if (capillarity.model == "power_law")
        return CapillarityModel::power_law(capillarity.kappa, capillarity.alpha,
                                           rho_bar);
    if (capillarity.model == "critical")
        return CapillarityModel::critical(capillarity.kappa, rho_bar);
    if (capillarity.model == "piecewise_constant")
        return CapillarityModel::piecewise_constant(
            capillarity.rho_threshold, capillarity.kappa, capillarity.epsilon,
            rho_bar);
    if (capillarity.model == "one_d")
        return CapillarityModel::one_d(capillarity.rho_threshold,
                                       capillarity.kappa, capillarity.epsilon,
                                       rho_bar);
    throw ValidationError("unknown capillarity model: " + capillarity.model);
}

ViscosityModel SimulationConfig::viscosity_model() const {
    if (viscosity.model == "constant")
        return ViscosityModel::constant(viscosity.mu, viscosity.lambda);
    if (viscosity.model == "linear_mu")
        return ViscosityModel::linear_mu(viscosity.c);
    throw ValidationError("unknown viscosity model: " + viscosity.model);
}

void SimulationConfig::validate() const {
    Grid g(dim, n, length); // grid invariants
    (void)g;
    if (!(t_end > 0)) throw ValidationError("time.t_end must be positive");
    if (!(cfl_factor > 0) || cfl_factor > 1.0)
        throw ValidationError("time.cfl must lie in (0, 1]");
    if (!(output_interval > 0))
        throw ValidationError("time.output_interval must be positive");
    if (!(gamma > 1)) throw ValidationError("pressure.gamma must exceed 1 (gamma>1 required)");
    if (!(a > 0)) throw ValidationError("pressure.a must be positive");
    if (!(rho_bar > 0)) throw ValidationError("pressure.rho_bar must be positive");
    if (rho_floor < 0) throw ValidationError("rho_floor must be nonnegative");
    if (!(delta_orlicz > 0)) throw ValidationError("delta_orlicz must be positive");

    double s = diagnostics.s;
    if (dim == 2 && !(s >= 0 && s < 2))
        throw ValidationError("diagnostics.s must lie in [0,2) for dim=2");
    if (dim == 1 && !(s >= 0 && s < 0.5))
        throw ValidationError("diagnostics.s must lie in [0,1/2) for dim=1");
    if (!(diagnostics.ball_radius > 0))
        throw ValidationError("diagnostics.ball_radius must be positive");
    if (!(diagnostics.alpha_gain > 0))
        throw ValidationError("diagnostics.alpha_gain must be positive");
    if (!(diagnostics.phi.radius > 0) || diagnostics.phi.radius >= 0.5 * length)
        throw ValidationError(
            "diagnostics.phi.radius must be positive and under half the period");

    if (scenario.id == ScenarioId::Manufactured && dim != 1)
        throw ValidationError("manufactured scenario requires dim=1");
    if (!(scenario.amplitude >= 0))
        throw ValidationError("scenario.amplitude must be nonnegative");

    (void)capillarity_model(); // constructor-level invariants
    (void)viscosity_model();
    (void)pressure_law();
}

} // namespace nsk
