#include "nsk/constitutive.hpp"

#include <cmath>

#include "nsk/errors.hpp"

namespace nsk {
namespace {

// 20-point Gauss-Legendre on [-1, 1], nodes computed once by Newton iteration
// on the Legendre recurrence.
struct GaussRule {
    static constexpr int N = 20;
    double x[N];
    double w[N];
    GaussRule() {
        for (int i = 0; i < N; ++i) {
            double t = std::cos(3.14159265358979323846 * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= N; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = N * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= N; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = N * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& gauss() {
    static GaussRule rule;
    return rule;
}

template <class Fn>
double gauss_integrate(double a, double b, Fn&& f) {
    const GaussRule& r = gauss();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < GaussRule::N; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

} // namespace

// -- CapillarityModel ---------------------------------------------------------

CapillarityModel CapillarityModel::power_law(double kappa, double alpha,
                                             double rho_ref) {
    if (!(kappa > 0)) throw ValidationError("capillarity: kappa must be positive");
    if (alpha == -2.0)
        throw ValidationError("capillarity: alpha = -2 is the Critical variant");
    if (!(rho_ref > 0)) throw ValidationError("capillarity: rho_ref must be positive");
    CapillarityModel m;
    m.kind_ = Kind::PowerLaw;
    m.kappa_ = kappa;
    m.alpha_ = alpha;
    m.rho_ref_ = rho_ref;
    return m;
}

CapillarityModel CapillarityModel::critical(double kappa, double rho_ref) {
    if (!(kappa > 0)) throw ValidationError("capillarity: kappa must be positive");
    if (!(rho_ref > 0)) throw ValidationError("capillarity: rho_ref must be positive");
    CapillarityModel m;
    m.kind_ = Kind::Critical;
    m.kappa_ = kappa;
    m.alpha_ = -2.0;
    m.rho_ref_ = rho_ref;
    return m;
}

CapillarityModel CapillarityModel::piecewise_constant(double rho_threshold,
                                                      double kappa, double epsilon,
                                                      double rho_ref) {
    if (!(rho_threshold > 0))
        throw ValidationError("capillarity: rho_threshold must be positive");
    if (!(kappa > 0)) throw ValidationError("capillarity: kappa must be positive");
    if (epsilon < 0) throw ValidationError("capillarity: epsilon must be >= 0");
    if (!(rho_ref > 0)) throw ValidationError("capillarity: rho_ref must be positive");
    CapillarityModel m;
    m.kind_ = Kind::PiecewiseConstant;
    m.kappa_ = kappa;
    m.threshold_ = rho_threshold;
    m.epsilon_ = epsilon;
    m.rho_ref_ = rho_ref;
    m.init_piecewise();
    return m;
}

CapillarityModel CapillarityModel::one_d(double rho_threshold, double kappa,
                                         double epsilon, double rho_ref) {
    CapillarityModel m =
        piecewise_constant(rho_threshold, kappa, epsilon, rho_ref);
    m.kind_ = Kind::OneD;
    return m;
}

void CapillarityModel::init_piecewise() {
    const double t = threshold_;
    // Hermite data: low branch value/slope at t, constant kappa with zero
    // slope at 2t.
    const double v0 = std::pow(t, -(2.0 + epsilon_));
    const double d0 = -(2.0 + epsilon_) * std::pow(t, -(3.0 + epsilon_));
    const double v1 = kappa_;
    const double d1 = 0.0;
    // h(rho) = h0 + h1 u + h2 u^2 + h3 u^3 with u = (rho - t)/t, u in [0,1].
    h_[0] = v0;
    h_[1] = d0 * t;
    h_[2] = 3.0 * (v1 - v0) - t * (2.0 * d0 + d1);
    h_[3] = -2.0 * (v1 - v0) + t * (d0 + d1);
    for (int i = 0; i <= 256; ++i) {
        double rho = t + t * i / 256.0;
        if (!(bridge_kappa(rho) > 0))
            throw ValidationError(
                "capillarity: piecewise bridge dips to kappa <= 0");
    }
    FA_t_ = antiderivative_A(t);
    FA_2t_ = FA_t_ + gauss_integrate(t, 2 * t, [this](double z) {
                 return std::sqrt(bridge_kappa(z));
             });
    FB_t_ = antiderivative_B(t);
    FB_2t_ = FB_t_ + gauss_integrate(t, 2 * t, [this](double z) {
                 return z * bridge_kappa(z);
             });
}

double CapillarityModel::require_positive(double rho) const {
    if (!(rho > 0))
        throw NonPositiveDensity("capillarity evaluated at rho = " +
                                 std::to_string(rho));
    return rho;
}

double CapillarityModel::bridge_kappa(double rho) const {
    double u = (rho - threshold_) / threshold_;
    return h_[0] + u * (h_[1] + u * (h_[2] + u * h_[3]));
}

double CapillarityModel::bridge_kappa_prime(double rho) const {
    double u = (rho - threshold_) / threshold_;
    return (h_[1] + u * (2.0 * h_[2] + 3.0 * u * h_[3])) / threshold_;
}

double CapillarityModel::kappa(double rho) const {
    require_positive(rho);
    switch (kind_) {
        case Kind::PowerLaw: return kappa_ * std::pow(rho, alpha_);
        case Kind::Critical: return kappa_ / (rho * rho);
        case Kind::PiecewiseConstant:
        case Kind::OneD:
            if (rho < threshold_) return std::pow(rho, -(2.0 + epsilon_));
            if (rho > 2.0 * threshold_) return kappa_;
            return bridge_kappa(rho);
    }
    return 0.0;
}

double CapillarityModel::kappa_prime(double rho) const {
    require_positive(rho);
    switch (kind_) {
        case Kind::PowerLaw:
            return kappa_ * alpha_ * std::pow(rho, alpha_ - 1.0);
        case Kind::Critical: return -2.0 * kappa_ / (rho * rho * rho);
        case Kind::PiecewiseConstant:
        case Kind::OneD:
            if (rho < threshold_)
                return -(2.0 + epsilon_) * std::pow(rho, -(3.0 + epsilon_));
            if (rho > 2.0 * threshold_) return 0.0;
            return bridge_kappa_prime(rho);
    }
    return 0.0;
}

// Primitive of sqrt(kappa) for the piecewise variants, continuous across the
// knots; the additive constant is fixed by the low branch.
double CapillarityModel::antiderivative_A(double x) const {
    const double e2 = 0.5 * epsilon_;
    if (x <= threshold_) {
        // integrand z^{-1-eps/2}
        return e2 == 0.0 ? std::log(x) : -std::pow(x, -e2) / e2;
    }
    if (x <= 2.0 * threshold_)
        return FA_t_ + gauss_integrate(threshold_, x, [this](double z) {
                   return std::sqrt(bridge_kappa(z));
               });
    return FA_2t_ + std::sqrt(kappa_) * (x - 2.0 * threshold_);
}

double CapillarityModel::antiderivative_B(double x) const {
    if (x <= threshold_) {
        // integrand z^{-1-eps}
        return epsilon_ == 0.0 ? std::log(x)
                               : -std::pow(x, -epsilon_) / epsilon_;
    }
    if (x <= 2.0 * threshold_)
        return FB_t_ + gauss_integrate(threshold_, x, [this](double z) {
                   return z * bridge_kappa(z);
               });
    return FB_2t_ + 0.5 * kappa_ * (x * x - 4.0 * threshold_ * threshold_);
}

double CapillarityModel::A(double rho) const {
    require_positive(rho);
    switch (kind_) {
        case Kind::PowerLaw: {
            double p = 0.5 * alpha_ + 1.0;
            return std::sqrt(kappa_) * (std::pow(rho, p) - std::pow(rho_ref_, p)) / p;
        }
        case Kind::Critical:
            return std::sqrt(kappa_) * std::log(rho / rho_ref_);
        case Kind::PiecewiseConstant:
        case Kind::OneD:
            return antiderivative_A(rho) - antiderivative_A(rho_ref_);
    }
    return 0.0;
}

double CapillarityModel::B(double rho) const {
    require_positive(rho);
    switch (kind_) {
        case Kind::PowerLaw: {
            double p = alpha_ + 2.0;
            return kappa_ * (std::pow(rho, p) - std::pow(rho_ref_, p)) / p;
        }
        case Kind::Critical: return kappa_ * std::log(rho / rho_ref_);
        case Kind::PiecewiseConstant:
        case Kind::OneD:
            return antiderivative_B(rho) - antiderivative_B(rho_ref_);
    }
    return 0.0;
}

// -- PressureLaw --------------------------------------------------------------

PressureLaw::PressureLaw(double a, double gamma, double rho_bar)
    : a_(a), gamma_(gamma), rho_bar_(rho_bar) {
    if (!(a > 0)) throw ValidationError("pressure: a must be positive");
    if (!(gamma > 1)) throw ValidationError("pressure: gamma must exceed 1");
    if (!(rho_bar > 0)) throw ValidationError("pressure: rho_bar must be positive");
}

double PressureLaw::pressure(double rho) const {
    return a_ * std::pow(rho, gamma_);
}

double PressureLaw::pressure_prime(double rho) const {
    return a_ * gamma_ * std::pow(rho, gamma_ - 1.0);
}

double PressureLaw::pi(double rho) const {
    if (!(rho > 0))
        throw NonPositiveDensity("Pi evaluated at rho = " + std::to_string(rho));
    // s (int_{rho_bar}^{s} P(z)/z^2 dz - P(rho_bar)/rho_bar) in closed form
    return a_ * std::pow(rho, gamma_) / (gamma_ - 1.0) -
           a_ * gamma_ * std::pow(rho_bar_, gamma_ - 1.0) * rho / (gamma_ - 1.0);
}

double PressureLaw::pi_excess(double rho) const {
    return pi(rho) - pi(rho_bar_);
}

double PressureLaw::j_gamma(double rho) const {
    return std::pow(rho, gamma_) + (gamma_ - 1.0) * std::pow(rho_bar_, gamma_) -
           gamma_ * std::pow(rho_bar_, gamma_ - 1.0) * rho;
}

// -- ViscosityModel -----------------------------------------------------------

ViscosityModel ViscosityModel::constant(double mu, double lambda) {
    ViscosityModel m;
    m.kind_ = Kind::Constant;
    m.mu_ = mu;
    m.lambda_ = lambda;
    return m;
}

ViscosityModel ViscosityModel::linear_mu(double c) {
    ViscosityModel m;
    m.kind_ = Kind::LinearMu;
    m.c_ = c;
    // The vacuum lower bound of the growth contract, with the linear slope as
    // the constant; validate() reports where mu = c rho undercuts it.
    GrowthBounds b;
    b.c = c;
    b.s0 = 1.0;
    b.c1 = c;
    b.m = 1;
    m.growth_ = b;
    return m;
}

std::pair<double, double> ViscosityModel::eval(double rho) const {
    if (kind_ == Kind::Constant) return {mu_, lambda_};
    return {c_ * rho, 0.0};
}

ViscosityModel::ValidationReport ViscosityModel::validate(double rho_lo,
                                                          double rho_hi, int dim,
                                                          int samples) const {
    if (!(rho_lo > 0) || rho_hi < rho_lo)
        throw ValidationError("viscosity validate: bad density range");
    ValidationReport rep;
    rep.mu_min = std::numeric_limits<double>::infinity();
    rep.trace_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        double rho = rho_lo + (rho_hi - rho_lo) * i / (samples - 1.0);
        auto [mu, lambda] = eval(rho);
        rep.mu_min = std::min(rep.mu_min, mu);
        rep.trace_min = std::min(rep.trace_min, 2.0 * mu + dim * lambda);
        if (!(mu > 0))
            throw ConstraintViolated("viscosity: mu(rho) <= 0 at rho = " +
                                     std::to_string(rho));
        if (2.0 * mu + dim * lambda < 0)
            throw ConstraintViolated("viscosity: 2 mu + N lambda < 0 at rho = " +
                                     std::to_string(rho));
    }
    if (growth_) {
        const GrowthBounds& b = *growth_;
        for (int i = 0; i < samples; ++i) {
            double s = rho_lo + (rho_hi - rho_lo) * i / (samples - 1.0);
            auto [mu, lambda] = eval(s);
            if (s <= b.s0 && !(mu > b.c)) {
                rep.ok = false;
                rep.violations.push_back(
                    "mu(s) > c fails near vacuum at s = " + std::to_string(s));
                break;
            }
        }
        for (int i = 0; i < samples; ++i) {
            double s = rho_lo + (rho_hi - rho_lo) * i / (samples - 1.0);
            auto [mu, lambda] = eval(s);
            if (s >= b.s0 && mu > b.c1 * std::pow(s, b.m)) {
                rep.ok = false;
                rep.violations.push_back("mu(s) <= c1 s^m fails at s = " +
                                         std::to_string(s));
                break;
            }
            if (b.c_lambda > 0 && s >= b.s0_lambda &&
                lambda > b.c2 * std::pow(s, b.m_lambda)) {
                rep.ok = false;
                rep.violations.push_back("lambda(s) <= c2 s^m' fails at s = " +
                                         std::to_string(s));
                break;
            }
        }
        if (b.c_lambda > 0) {
            for (int i = 0; i < samples; ++i) {
                double s = rho_lo + (rho_hi - rho_lo) * i / (samples - 1.0);
                if (s <= b.s0_lambda && !(lambda(s) > b.c_lambda)) {
                    rep.ok = false;
                    rep.violations.push_back(
                        "lambda(s) > c' fails near vacuum at s = " +
                        std::to_string(s));
                    break;
                }
            }
        }
    }
    return rep;
}

// -- Orlicz norm ---------------------------------------------------------------

double orlicz_gauge(double x, double p, double q, double delta) {
    if (x <= delta) return std::pow(x, p);
    return std::pow(delta, p - q) * std::pow(x, q);
}

double orlicz_norm(const ScalarField& f, double p, double q, double delta) {
    if (!(p >= 1) || !(q >= 1))
        throw ValidationError("orlicz_norm: p, q must be >= 1");
    if (!(delta > 0)) throw ValidationError("orlicz_norm: delta must be positive");
    const double dv = f.grid.cell_volume();
    const double peak = f.v.abs().maxCoeff();
    if (peak == 0.0) return 0.0;

    auto gauge_integral = [&](double t) {
        double s = 0.0;
        for (int i = 0; i < f.v.size(); ++i)
            s += orlicz_gauge(std::abs(f.v[i]) / t, p, q, delta);
        return s * dv;
    };

    double hi = peak * std::max(1.0, std::pow(f.grid.volume(), 1.0 / p));
    while (gauge_integral(hi) > 1.0) hi *= 2.0;
    double lo = hi;
    while (gauge_integral(lo) <= 1.0 && lo > 1e-300) lo *= 0.5;
    for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (gauge_integral(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace nsk
