#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nsk/constitutive.hpp"
#include "nsk/grid.hpp"

namespace nsk {

enum class ScenarioId {
    SmallData2D,
    LargeData1D,
    VacuumApproach,
    LargeKappa,
    CriticalCapillarity,
    Manufactured,
};

ScenarioId parse_scenario_id(const std::string& s);
std::string to_string(ScenarioId id);

struct ScenarioSpec {
    ScenarioId id = ScenarioId::SmallData2D;
    double amplitude = 0.05;
    int wavenumber = 0;         // 0 = seeded multi-mode data
    double bump_width = 0.0;    // 0 = quarter domain
    double floor_multiple = 50; // vacuum-approach: min rho0 / rho_floor
    std::uint64_t seed = 1;
};

struct CapillaritySpec {
    std::string model = "power_law"; // power_law | critical | piecewise_constant | one_d
    double kappa = 1.0;
    double alpha = 0.0;
    double rho_threshold = 0.5;
    double epsilon = 0.0;
};

struct ViscositySpec {
    std::string model = "constant"; // constant | linear_mu
    double mu = 0.1;
    double lambda = 0.0;
    double c = 0.1; // slope for linear_mu
};

struct PhiSpec {
    std::array<double, 2> center = {3.14159265358979323846,
                                    3.14159265358979323846};
    double radius = 2.0;
    int order = 4;
};

struct DiagnosticsSpec {
    double s = 1.0;           // gain-norm regularity parameter
    double ball_radius = 0.5; // concentration scan radius
    double alpha_gain = 0.5;  // integrability-gain exponent
    PhiSpec phi;
    bool keep_snapshots = false;
};

/// Full run description; load_config fills defaults and validate() enforces
/// the stated invariants.
struct SimulationConfig {
    int dim = 1;
    int n = 128;
    double length = 2.0 * 3.14159265358979323846;

    double t_end = 1.0;
    double cfl_factor = 0.25;
    double output_interval = 0.01;

    double a = 1.0;
    double gamma = 2.0;
    double rho_bar = 1.0;

    ViscositySpec viscosity;
    CapillaritySpec capillarity;
    ScenarioSpec scenario;
    DiagnosticsSpec diagnostics;

    double rho_floor = 0.0;    // 0 = default 1e-6 * rho_bar
    double delta_orlicz = 1.0;

    void validate() const; // throws ValidationError naming the invariant

    Grid grid() const { return Grid(dim, n, length); }
    PressureLaw pressure_law() const { return PressureLaw(a, gamma, rho_bar); }
    CapillarityModel capillarity_model() const;
    ViscosityModel viscosity_model() const;
    double effective_rho_floor() const {
        return rho_floor > 0.0 ? rho_floor : 1e-6 * rho_bar;
    }
};

} // namespace nsk
