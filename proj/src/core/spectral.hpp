#pragma once

#include "grid.hpp"

namespace kdv5 {

/// <x> = 1 + |x|, the bracket used in every weight of this project.
/// Fixed project-wide; the sqrt(1+x^2) variant changes empirical constants.
inline double bracket(double x) { return 1.0 + std::abs(x); }

/// H^s norm: sqrt( sum_k <xi_k>^{2s} |F_k|^2 * delta_xi ).
/// At s = 0 this is the L^2 norm of the physical samples (Parseval).
double sobolev_norm(const SpectralField& F, double s);

/// L^2(box) norm of physical samples, sqrt( sum |f_m|^2 dx ).
double l2_norm(const RealField& f);

/// Plain l2 distance between two fields on the same grid, sqrt-dx weighted.
double l2_distance(const RealField& a, const RealField& b);

/// m-th spectral derivative: coefficient-wise multiplication by (i xi)^m.
/// The unpaired Nyquist mode is zeroed for odd m so real fields stay real.
SpectralField spectral_derivative(const SpectralField& F, int m);

} // namespace kdv5
