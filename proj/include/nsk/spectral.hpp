#pragma once

#include <limits>

#include "nsk/fft.hpp"
#include "nsk/field.hpp"

namespace nsk {

// Fourier-multiplier operators on the periodic grid. Wavenumbers are
// xi = 2 pi m / L with integer mode m in [-n/2+1, n/2]. First-derivative
// multipliers zero the Nyquist mode so real fields map to real fields;
// Lambda^s (s>0), the Riesz operators and the inverse Laplacian annihilate
// the mean. All functions are pure.

ScalarField derivative(const ScalarField& f, int axis);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
VectorField divergence(const TensorField& t); // (div T)_i = d_j T_ij
ScalarField laplacian(const ScalarField& f);

/// Gradient of a vector field; component (i,j) holds d_j u_i.
TensorField gradient(const VectorField& u);

/// Lambda^s: multiplier |xi|^s. Zero mode maps to 0 for s > 0 and is kept
/// for s = 0; s < 0 requires a zero-mean input (NegativePowerOnMean).
ScalarField fractional_power(const ScalarField& f, double s);

/// Riesz operator R_i: multiplier i xi_i/|xi|, zero mode annihilated.
ScalarField riesz(const ScalarField& f, int axis);

/// Unique zero-mean g with laplacian(g) = f; requires zero-mean f (NonZeroMean).
ScalarField inverse_laplacian(const ScalarField& f);

/// 2/3-rule dealiasing: zero every mode with |m| > n/3 on any axis.
ScalarField dealias(const ScalarField& f);
void dealias_in_place(ScalarField& f);
void dealias_in_place(VectorField& v);

// -- quadrature and norms ----------------------------------------------------

double integral(const ScalarField& f);
double mean(const ScalarField& f);
double inner(const ScalarField& a, const ScalarField& b); // \int a b dx
double l2_norm(const ScalarField& f);
double linf_norm(const ScalarField& f);
/// L^p norm; p = infinity() gives the max norm.
double lp_norm(const ScalarField& f, double p);

/// Modal energy sum matching \int |f|^2 dx (Parseval).
double modal_energy(const ScalarField& f);

/// Homogeneous: ||Lambda^s (f - mean f)||_{L^2} for s >= 0, ||Lambda^s f|| for
/// s < 0 (zero-mean required). Inhomogeneous: (||f||^2 + ||Lambda^s f||^2)^{1/2}.
double sobolev_norm(const ScalarField& f, double s, bool homogeneous);

/// Besov norm with sharp dyadic annuli 2^j <= |xi| < 2^{j+1} (j >= 0) plus a
/// low block |xi| < 1 counted as j = -1. p or q may be infinity().
double besov_norm(const ScalarField& f, double s, double p, double q);

inline double infinity() { return std::numeric_limits<double>::infinity(); }

} // namespace nsk
