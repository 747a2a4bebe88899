#include "nsk/korteweg.hpp"

#include <cmath>

#include "nsk/errors.hpp"
#include "nsk/spectral.hpp"

namespace nsk {
namespace {

void require_positive(const ScalarField& rho) {
    double mn = rho.v.minCoeff();
    if (!(mn > 0))
        throw NonPositiveDensity("korteweg: density minimum " +
                                 std::to_string(mn) + " is not positive");
}

ScalarField map_field(const ScalarField& rho,
                      const std::function<double(double)>& fn) {
    ScalarField out(rho.grid);
    for (int i = 0; i < rho.v.size(); ++i) out.v[i] = fn(rho.v[i]);
    return out;
}

} // namespace

VectorField div_k_primitive(const ScalarField& rho, const CapillarityModel& model) {
    require_positive(rho);
    const Grid& g = rho.grid;
    VectorField grad_rho = gradient(rho);
    ScalarField lap_rho = laplacian(rho);

    ScalarField kap = map_field(rho, [&](double r) { return model.kappa(r); });
    ScalarField kapp = map_field(rho, [&](double r) { return model.kappa_prime(r); });

    ScalarField grad2(g);
    for (int i = 0; i < g.dim(); ++i) grad2.v += grad_rho[i].v.square();

    // scalar head: rho kappa Delta rho + 1/2 (kappa + rho kappa') |grad rho|^2
    ScalarField head(g);
    head.v = rho.v * kap.v * lap_rho.v +
             0.5 * (kap.v + rho.v * kapp.v) * grad2.v;

    VectorField out = gradient(head);
    TensorField quad(g);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            quad(i, j).v = kap.v * grad_rho[i].v * grad_rho[j].v;
    VectorField div_quad = divergence(quad);
    for (int i = 0; i < g.dim(); ++i) out[i].v -= div_quad[i].v;
    return out;
}

TensorField korteweg_tensor(const ScalarField& rho, const CapillarityModel& model) {
    require_positive(rho);
    const Grid& g = rho.grid;
    ScalarField a_field = map_field(rho, [&](double r) { return model.A(r); });
    ScalarField b_field = map_field(rho, [&](double r) { return model.B(r); });
    // c = (kappa + rho kappa') / (2 kappa); for a power law this is (1+alpha)/2
    ScalarField c_field = map_field(rho, [&](double r) {
        double k = model.kappa(r);
        return 0.5 * (k + r * model.kappa_prime(r)) / k;
    });

    VectorField grad_a = gradient(a_field);
    ScalarField lap_b = laplacian(b_field);
    ScalarField grad_a2(g);
    for (int i = 0; i < g.dim(); ++i) grad_a2.v += grad_a[i].v.square();

    TensorField k_out(g);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            k_out(i, j).v = -grad_a[i].v * grad_a[j].v;
            if (i == j) k_out(i, j).v += lap_b.v - c_field.v * grad_a2.v;
        }
    return k_out;
}

KortewegOutput korteweg_output(const ScalarField& rho,
                               const CapillarityModel& model) {
    TensorField k = korteweg_tensor(rho, model);
    VectorField force = divergence(k);
    return {std::move(k), std::move(force), capillary_energy(rho, model)};
}

double capillary_energy(const ScalarField& rho, const CapillarityModel& model) {
    require_positive(rho);
    VectorField grad_rho = gradient(rho);
    ScalarField integrand(rho.grid);
    for (int i = 0; i < rho.grid.dim(); ++i)
        integrand.v += grad_rho[i].v.square();
    for (int i = 0; i < rho.v.size(); ++i)
        integrand.v[i] *= 0.5 * model.kappa(rho.v[i]);
    return integral(integrand);
}

double equivalence_residual(const ScalarField& rho, const CapillarityModel& model) {
    VectorField from_tensor = divergence(korteweg_tensor(rho, model));
    VectorField primitive = div_k_primitive(rho, model);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < rho.grid.dim(); ++i) {
        ScalarField diff(rho.grid);
        diff.v = from_tensor[i].v - primitive[i].v;
        num += inner(diff, diff);
        den += inner(primitive[i], primitive[i]);
    }
    num = std::sqrt(num);
    den = std::sqrt(den);
    return den > 0.0 ? num / den : num;
}

CapillaryPowerCheck capillary_power_check(const ScalarField& rho,
                                          const VectorField& u,
                                          const CapillarityModel& model) {
    require_positive(rho);
    const Grid& g = rho.grid;

    VectorField div_k = div_k_primitive(rho, model);
    double work = 0.0;
    for (int i = 0; i < g.dim(); ++i) work += inner(div_k[i], u[i]);

    // d_t rho = -div(rho u)
    VectorField m(g);
    for (int i = 0; i < g.dim(); ++i) m[i].v = rho.v * u[i].v;
    ScalarField drho(g);
    drho.v = -divergence(m).v;

    VectorField grad_rho = gradient(rho);
    VectorField grad_drho = gradient(drho);
    ScalarField grad2(g);
    for (int i = 0; i < g.dim(); ++i) grad2.v += grad_rho[i].v.square();

    ScalarField integrand(g);
    for (int idx = 0; idx < g.size(); ++idx) {
        double r = rho.v[idx];
        double dot = 0.0;
        for (int i = 0; i < g.dim(); ++i)
            dot += grad_rho[i].v[idx] * grad_drho[i].v[idx];
        integrand.v[idx] = 0.5 * model.kappa_prime(r) * grad2.v[idx] * drho.v[idx] +
                           model.kappa(r) * dot;
    }
    return {work, integral(integrand)};
}

double capillary_power_residual(const ScalarField& rho, const VectorField& u,
                                const CapillarityModel& model) {
    CapillaryPowerCheck c = capillary_power_check(rho, u, model);
    double s = c.scale();
    if (s == 0.0) return 0.0;
    return std::abs(c.residual()) / s;
}

} // namespace nsk
