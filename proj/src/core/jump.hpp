#pragma once

#include "grid.hpp"

namespace kdv5 {

enum class JumpMethod { one_sided, spectral_band };

struct JumpOptions {
    /// Band of the spectral estimator as fractions of xi_max.
    double band_lo_frac = 0.25;
    double band_hi_frac = 0.5;
    double dealias_fraction = 2.0 / 3.0;

    /// Dispersive deflation: components proportional to e^{-i m xi^5} with
    /// m on the grid {m_step, 2 m_step, ..., m_max} (times slowly varying
    /// amplitudes, polynomial degree poly_degree) are projected out of the
    /// band before the constant term is read off. Plain band averaging
    /// leaves ~K^{-1/2} of each smooth W(m)-propagated term behind, which
    /// swamps kink amplitudes below ~1e-3 of the field scale.
    double deflate_m_max = 6.0;
    double deflate_m_step = 0.5;
    int poly_degree = 14;
    /// W phase cadence the regressors are built on; must divide every m.
    double cadence_step = 0.125;
};

/// Estimate the derivative jump f'(x0+) - f'(x0-).
///
/// one_sided: second-order one-sided difference slopes on the samples.
/// spectral_band: a kink of size Jp at x0 contributes
/// -Jp e^{-i xi x0} / (sqrt(2 pi) xi^2) to the coefficients; the estimator
/// regresses -sqrt(2 pi) xi^2 Re[coeff(xi) e^{i xi x0}] on a constant plus
/// nuisance shapes (xi^{+-2}, xi^{+-4} and the deflation components above).
double jump_estimate(const RealField& f, double x0, JumpMethod method,
                     const JumpOptions& opt = {});
double jump_estimate(const SpectralField& F, double x0, JumpMethod method,
                     const JumpOptions& opt = {});

struct TailFit {
    double slope = 0.0;
    /// Set when every band coefficient is below 1e-14; slope is meaningless.
    bool degenerate = false;
};

/// Least-squares slope of log|coeff| vs log xi over xi in [band_lo, band_hi]
/// (positive side). Band must stay within the dealiased spectrum and hold at
/// least 32 modes.
TailFit tail_exponent_fit(const SpectralField& F, double band_lo, double band_hi,
                          double dealias_fraction = 2.0 / 3.0);

} // namespace kdv5
