#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nsk/field.hpp"
#include "nsk/grid.hpp"

namespace nsk {

using Complex = std::complex<double>;

/// Unnormalized forward DFT of the real samples: F_k = sum_x f(x) e^{-i xi_k x}.
/// Layout matches the field (x fastest); the full complex spectrum is kept,
/// Hermitian symmetry implicit in the real input.
Eigen::ArrayXcd forward_transform(const Grid& g, const Eigen::ArrayXd& values);

/// Inverse of forward_transform, returning the real part of the samples.
Eigen::ArrayXd inverse_transform_real(const Grid& g, const Eigen::ArrayXcd& spec);

namespace fft {

/// Integer mode of flat spectral index j along one axis: 0..n/2, then negative.
inline int mode_of(int j, int n) { return j <= n / 2 ? j : j - n; }

/// In-place radix-2 transform on n contiguous complex values (n a power of 2).
/// Plans (twiddle tables) are cached per thread; one thread = one workspace,
/// so concurrent transforms from different threads never share scratch.
void transform_pow2(Complex* data, int n, bool inverse);

} // namespace fft

} // namespace nsk
