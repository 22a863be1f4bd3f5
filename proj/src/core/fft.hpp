#pragma once

#include "grid.hpp"

namespace kdv5 {

/// Unnormalized in-place DFTs (FFTW behind a plan cache, thread-safe).
///
/// forward_raw computes H_k = sum_m f_m e^{-2 pi i k m / n};
/// inverse_raw is its unscaled adjoint (caller divides by n).
namespace fft {
void forward_raw(complex* data, int n);
void inverse_raw(complex* data, int n);
}

/// Discrete realization of F(xi) = (2*pi)^{-1/2} integral e^{-i xi x} f(x) dx
/// on the periodic box: coeff_k = dx / sqrt(2*pi) * sum_m f(x_m) e^{-i xi_k x_m}.
/// With this scaling discrete Sobolev norms are Riemann sums of the continuum
/// integrals (Parseval holds exactly, see sobolev_norm).
SpectralField forward_transform(const RealField& f);

/// Inverse of forward_transform; imaginary residue is dropped (it is at
/// roundoff level for Hermitian input, and tests pin it below 1e-10).
RealField inverse_transform(const SpectralField& F);

/// Max |imag| of the complex inverse, for symmetry diagnostics.
double inverse_imag_residue(const SpectralField& F);

/// Complex-valued inverse, used internally where phases matter.
std::vector<complex> inverse_transform_complex(const SpectralField& F);

} // namespace kdv5
