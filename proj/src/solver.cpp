#include "nsk/solver.hpp"

#include <cmath>

#include "nsk/errors.hpp"
#include "nsk/korteweg.hpp"
#include "nsk/spectral.hpp"

namespace nsk {
namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

RhsEval compute_rhs(const FlowState& state, const FlowModels& models,
                    const Forcing* forcing) {
    const Grid& g = state.rho.grid;
    const int d = g.dim();

    double rho_min = state.rho.v.minCoeff();
    if (rho_min < models.rho_floor)
        throw VacuumApproached(state.time, rho_min, models.rho_floor);

    VectorField u = state.velocity();

    RhsEval out{ScalarField(g), VectorField(g), 0.0, 0.0};
    out.drho.v = -divergence(state.momentum).v;

    // convection: -d_j (m_i u_j)
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            ScalarField flux(g);
            flux.v = state.momentum[i].v * u[j].v;
            out.dmom[i].v -= derivative(flux, j).v;
        }
    }

    // viscous stress and its dissipation integrands
    TensorField grad_u = gradient(u);
    ScalarField div_u(g);
    for (int i = 0; i < d; ++i) div_u.v += grad_u(i, i).v;

    ScalarField mu(g), lambda(g);
    for (int idx = 0; idx < g.size(); ++idx) {
        auto [m, l] = models.viscosity.eval(state.rho.v[idx]);
        mu.v[idx] = m;
        lambda.v[idx] = l;
    }

    TensorField stress(g); // 2 mu D_ij
    ScalarField d_sq(g);   // |D(u)|^2
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::ArrayXd dij = 0.5 * (grad_u(i, j).v + grad_u(j, i).v);
            d_sq.v += dij.square();
            stress(i, j).v = 2.0 * mu.v * dij;
        }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            out.dmom[i].v += derivative(stress(i, j), j).v;
        ScalarField bulk(g);
        bulk.v = lambda.v * div_u.v;
        out.dmom[i].v += derivative(bulk, i).v;
    }

    ScalarField diss_a(g), diss_b(g);
    diss_a.v = 2.0 * mu.v * d_sq.v + lambda.v * div_u.v.square();
    diss_b.v = mu.v * d_sq.v + (mu.v + lambda.v) * div_u.v.square();
    out.dissipation_a29 = integral(diss_a);
    out.dissipation_ineq1 = integral(diss_b);

    // pressure gradient
    ScalarField p(g);
    for (int idx = 0; idx < g.size(); ++idx)
        p.v[idx] = models.pressure.pressure(state.rho.v[idx]);
    VectorField grad_p = gradient(p);
    for (int i = 0; i < d; ++i) out.dmom[i].v -= grad_p[i].v;

    // capillary force
    VectorField div_k = div_k_primitive(state.rho, models.capillarity);
    for (int i = 0; i < d; ++i) out.dmom[i].v += div_k[i].v;

    if (forcing) forcing->add(state.time, out.drho, out.dmom);

    dealias_in_place(out.drho);
    dealias_in_place(out.dmom);
    return out;
}

double stable_timestep(const FlowState& state, const FlowModels& models,
                       double cfl) {
    const Grid& g = state.rho.grid;
    const double dx = g.dx();

    double wave_max = 0.0;
    double visc_max = 0.0;
    double disp_max = 0.0;
    double rho_min = state.rho.v.minCoeff();
    VectorField u = state.velocity();
    for (int idx = 0; idx < g.size(); ++idx) {
        double rho = state.rho.v[idx];
        double speed = 0.0;
        for (int i = 0; i < g.dim(); ++i)
            speed = std::max(speed, std::abs(u[i].v[idx]));
        wave_max = std::max(
            wave_max, speed + std::sqrt(models.pressure.pressure_prime(rho)));
        auto [m, l] = models.viscosity.eval(rho);
        visc_max = std::max(visc_max, 2.0 * m + std::abs(l));
        disp_max = std::max(disp_max, rho * models.capillarity.kappa(rho));
    }

    double dt = dx / wave_max;
    if (visc_max > 0.0)
        dt = std::min(dt, rho_min * dx * dx / (4.0 * visc_max));
    if (disp_max > 0.0)
        dt = std::min(dt, dx * dx / (2.0 * kPi * std::sqrt(disp_max)));
    return cfl * dt;
}

FlowState advance(const FlowState& state, double dt, const FlowModels& models,
                  StepAccumulators* acc, const Forcing* forcing) {
    const Grid& g = state.rho.grid;
    const int d = g.dim();

    auto staged = [&](double c, const RhsEval& k) {
        FlowState s(g);
        s.time = state.time + c * dt;
        s.rho.v = state.rho.v + c * dt * k.drho.v;
        for (int i = 0; i < d; ++i)
            s.momentum[i].v = state.momentum[i].v + c * dt * k.dmom[i].v;
        return s;
    };

    RhsEval k1 = compute_rhs(state, models, forcing);
    RhsEval k2 = compute_rhs(staged(0.5, k1), models, forcing);
    RhsEval k3 = compute_rhs(staged(0.5, k2), models, forcing);
    RhsEval k4 = compute_rhs(staged(1.0, k3), models, forcing);

    FlowState next(g);
    next.time = state.time + dt;
    next.rho.v = state.rho.v +
                 dt / 6.0 * (k1.drho.v + 2.0 * k2.drho.v + 2.0 * k3.drho.v +
                             k4.drho.v);
    for (int i = 0; i < d; ++i)
        next.momentum[i].v =
            state.momentum[i].v + dt / 6.0 * (k1.dmom[i].v + 2.0 * k2.dmom[i].v +
                                              2.0 * k3.dmom[i].v + k4.dmom[i].v);
    if (acc) {
        acc->dissipation_a29 +=
            dt / 6.0 * (k1.dissipation_a29 + 2.0 * k2.dissipation_a29 +
                        2.0 * k3.dissipation_a29 + k4.dissipation_a29);
        acc->dissipation_ineq1 +=
            dt / 6.0 * (k1.dissipation_ineq1 + 2.0 * k2.dissipation_ineq1 +
                        2.0 * k3.dissipation_ineq1 + k4.dissipation_ineq1);
    }

    double rho_min = next.rho.v.minCoeff();
    if (rho_min < models.rho_floor)
        throw VacuumApproached(next.time, rho_min, models.rho_floor);
    return next;
}

} // namespace nsk
