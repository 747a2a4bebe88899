#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsk/field.hpp"

namespace nsk {

/// Density-dependent capillarity coefficient kappa(rho) together with the
/// derived antiderivatives
///
///   A(rho) = int_{rho_ref}^{rho} sqrt(kappa(z)) dz,
///   B(rho) = int_{rho_ref}^{rho} z kappa(z) dz,
///
/// so A'(rho)^2 = kappa(rho), B'(rho) = rho kappa(rho) and
/// A(rho_ref) = B(rho_ref) = 0. Closed forms are used on power-law branches;
/// the piecewise variants bridge their branches with a cubic Hermite
/// interpolant in kappa (value and slope matched at both knots) and integrate
/// the bridge with Gauss-Legendre quadrature.
class CapillarityModel {
  public:
    enum class Kind { PowerLaw, Critical, PiecewiseConstant, OneD };

    static CapillarityModel power_law(double kappa, double alpha,
                                      double rho_ref = 1.0);
    static CapillarityModel critical(double kappa, double rho_ref = 1.0);
    static CapillarityModel piecewise_constant(double rho_threshold, double kappa,
                                               double epsilon = 0.0,
                                               double rho_ref = 1.0);
    static CapillarityModel one_d(double rho_threshold, double kappa,
                                  double epsilon = 0.0, double rho_ref = 1.0);

    Kind kind() const { return kind_; }
    double coefficient() const { return kappa_; }
    double alpha() const { return alpha_; }
    double rho_ref() const { return rho_ref_; }
    double rho_threshold() const { return threshold_; }
    double epsilon() const { return epsilon_; }

    double kappa(double rho) const;
    double kappa_prime(double rho) const;
    double A(double rho) const;
    double A_prime(double rho) const { return std::sqrt(kappa(rho)); }
    double B(double rho) const;
    double B_prime(double rho) const { return rho * kappa(rho); }

  private:
    CapillarityModel() = default;
    void init_piecewise();
    double require_positive(double rho) const;
    double bridge_kappa(double rho) const;
    double bridge_kappa_prime(double rho) const;
    double antiderivative_A(double x) const; // continuous primitive of sqrt(kappa)
    double antiderivative_B(double x) const; // continuous primitive of z*kappa

    Kind kind_ = Kind::PowerLaw;
    double kappa_ = 1.0;
    double alpha_ = 0.0;
    double rho_ref_ = 1.0;
    double threshold_ = 1.0; // piecewise knot; bridge spans [t, 2t]
    double epsilon_ = 0.0;
    // Hermite coefficients on [t, 2t] and cached primitive values at knots.
    double h_[4] = {0, 0, 0, 0};
    double FA_t_ = 0, FA_2t_ = 0, FB_t_ = 0, FB_2t_ = 0;
};

/// Isentropic pressure P(rho) = a rho^gamma with reference density rho_bar,
/// plus the potential Pi with Pi'(rho_bar) = 0 and the normalized deviation
/// j_gamma(rho) = rho^gamma + (gamma-1) rho_bar^gamma - gamma rho_bar^{gamma-1} rho.
class PressureLaw {
  public:
    PressureLaw(double a, double gamma, double rho_bar);

    double a() const { return a_; }
    double gamma() const { return gamma_; }
    double rho_bar() const { return rho_bar_; }

    double pressure(double rho) const;       // rho >= 0
    double pressure_prime(double rho) const; // rho >= 0
    double pi(double rho) const;             // rho > 0
    /// Pi(rho) - Pi(rho_bar); equals a j_gamma(rho)/(gamma-1).
    double pi_excess(double rho) const;
    double j_gamma(double rho) const; // rho >= 0

  private:
    double a_, gamma_, rho_bar_;
};

/// Lame coefficients mu(rho), lambda(rho) with the optional growth contract
/// (lower bounds near vacuum, integer-power upper bounds at large density).
class ViscosityModel {
  public:
    struct GrowthBounds {
        double c = 0, s0 = 0;        // mu(s) > c on [0, s0]
        double c1 = 0;               // mu(s) <= c1 s^m beyond s0
        int m = 0;
        double c_lambda = 0, s0_lambda = 0;
        double c2 = 0;
        int m_lambda = 0;
    };

    struct ValidationReport {
        bool ok = true;
        std::vector<std::string> violations;
        double mu_min = 0;
        double trace_min = 0; // min of 2 mu + N lambda
    };

    static ViscosityModel constant(double mu, double lambda);
    static ViscosityModel linear_mu(double c); // mu = c rho, lambda = 0

    std::pair<double, double> eval(double rho) const;
    double mu(double rho) const { return eval(rho).first; }
    double lambda(double rho) const { return eval(rho).second; }
    bool is_constant() const { return kind_ == Kind::Constant; }

    void set_growth_bounds(const GrowthBounds& b) { growth_ = b; }
    const std::optional<GrowthBounds>& growth_bounds() const { return growth_; }

    /// Samples rho in [rho_lo, rho_hi]. Throws ConstraintViolated if mu <= 0
    /// or 2 mu + N lambda < 0 anywhere; growth-bound failures are reported,
    /// not thrown.
    ValidationReport validate(double rho_lo, double rho_hi, int dim,
                              int samples = 512) const;

  private:
    enum class Kind { Constant, LinearMu };
    Kind kind_ = Kind::Constant;
    double mu_ = 1.0, lambda_ = 0.0, c_ = 1.0;
    std::optional<GrowthBounds> growth_;
};

/// Orlicz norm inf{t > 0 : int Psi(|f|/t) dx <= 1} with the spliced gauge
/// Psi(x) = x^p for x <= delta and delta^{p-q} x^q above. Bisection to
/// relative tolerance 1e-10; zero field gives 0.
double orlicz_norm(const ScalarField& f, double p, double q, double delta = 1.0);

/// The gauge itself, exposed for the closed-form oracles.
double orlicz_gauge(double x, double p, double q, double delta);

} // namespace nsk
