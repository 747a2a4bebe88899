#pragma once

#include <string>
#include <vector>

namespace nsk {

/// Time series of the per-output diagnostics of one run. The first thirteen
/// columns are the persisted CSV schema (mom_y present only in 2D); the
/// remaining vectors are in-memory accumulators for the space-time norms.
struct DiagnosticsSeries {
    int dim = 1;

    std::vector<double> t;
    std::vector<double> mass;
    std::vector<double> mom_x;
    std::vector<double> mom_y; // 2D only
    std::vector<double> energy;
    std::vector<double> energy_gamma;
    std::vector<double> diss_cum_a29;
    std::vector<double> diss_cum_ineq1;
    std::vector<double> budget_residual;
    std::vector<double> rho_min;
    std::vector<double> rho_max;
    std::vector<double> cap_energy;
    std::vector<double> concentration_max;

    // space-time accumuland integrands, recorded at the same instants
    std::vector<double> gain_integrand;      // ||phi B(rho)||^2_{H^{1+s/2}}
    std::vector<double> int_gain_density;    // int |phi rho|^{gamma+alpha} dx
    std::vector<double> int_gain_gradient;   // int rho^{alpha-2} |grad rho|^2 dx
    std::vector<double> rho_lgamma;          // ||rho||_{L^gamma}

    std::size_t rows() const { return t.size(); }
};

/// Exact CSV schema of the spec: header plus one row per output instant,
/// doubles rendered with "%.17g".
std::string to_csv(const DiagnosticsSeries& s);

} // namespace nsk
