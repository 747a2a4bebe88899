#pragma once

#include <cmath>

#include "nsk/solver.hpp"

namespace nsk {

/// One-dimensional manufactured solution
///
///   rho*(x,t) = rho_bar + a_rho sin(k x) cos(w t)
///   u*(x,t)   = a_u sin(k x) sin(w t)
///
/// with a gamma=2 pressure, constant capillarity (alpha = 0) and constant
/// viscosities. Every derivative below was expanded by hand from these two
/// lines; the forcing assembles them through the product rule, so no symbolic
/// machinery is involved at run time.
struct ManufacturedSolution : Forcing {
    double rho_bar = 2.0;
    double a_rho = 0.1;
    double a_u = 0.1;
    double k = 1.0;
    double w = 1.0;
    double a_pressure = 1.0;
    double gamma = 2.0;
    double kappa = 1.0;
    double mu = 0.1;
    double lambda = 0.05;

    double rho(double x, double t) const {
        return rho_bar + a_rho * std::sin(k * x) * std::cos(w * t);
    }
    double rho_t(double x, double t) const {
        return -w * a_rho * std::sin(k * x) * std::sin(w * t);
    }
    double rho_x(double x, double t) const {
        return k * a_rho * std::cos(k * x) * std::cos(w * t);
    }
    double rho_xxx(double x, double t) const {
        return -k * k * k * a_rho * std::cos(k * x) * std::cos(w * t);
    }
    double u(double x, double t) const {
        return a_u * std::sin(k * x) * std::sin(w * t);
    }
    double u_t(double x, double t) const {
        return w * a_u * std::sin(k * x) * std::cos(w * t);
    }
    double u_x(double x, double t) const {
        return k * a_u * std::cos(k * x) * std::sin(w * t);
    }
    double u_xx(double x, double t) const {
        return -k * k * a_u * std::sin(k * x) * std::sin(w * t);
    }

    /// Mass source: rho_t + (rho u)_x.
    double forcing_rho(double x, double t) const {
        return rho_t(x, t) + rho_x(x, t) * u(x, t) + rho(x, t) * u_x(x, t);
    }

    /// Momentum source: (rho u)_t + (rho u^2)_x - (2mu+lambda) u_xx
    /// + P(rho)_x - kappa rho rho_xxx  (div K = kappa rho rho_xxx in 1D for
    /// constant kappa).
    double forcing_momentum(double x, double t) const {
        double r = rho(x, t), v = u(x, t);
        double m_t = rho_t(x, t) * v + r * u_t(x, t);
        double conv = rho_x(x, t) * v * v + 2.0 * r * v * u_x(x, t);
        double visc = (2.0 * mu + lambda) * u_xx(x, t);
        double press = a_pressure * gamma * std::pow(r, gamma - 1.0) * rho_x(x, t);
        double cap = kappa * r * rho_xxx(x, t);
        return m_t + conv - visc + press - cap;
    }

    void add(double t, ScalarField& drho, VectorField& dmom) const override {
        const Grid& g = drho.grid;
        for (int i = 0; i < g.n(); ++i) {
            double x = g.coord(i);
            drho.v[i] += forcing_rho(x, t);
            dmom[0].v[i] += forcing_momentum(x, t);
        }
    }

    FlowState exact_state(const Grid& g, double t) const {
        FlowState s(g);
        s.time = t;
        for (int i = 0; i < g.n(); ++i) {
            double x = g.coord(i);
            s.rho.v[i] = rho(x, t);
            s.momentum[0].v[i] = rho(x, t) * u(x, t);
        }
        return s;
    }

    FlowModels models(double rho_floor = 1e-6) const {
        return {PressureLaw(a_pressure, gamma, rho_bar),
                ViscosityModel::constant(mu, lambda),
                CapillarityModel::power_law(kappa, 0.0, rho_bar), rho_floor};
    }
};

} // namespace nsk
