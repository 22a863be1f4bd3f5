#pragma once

#include "bourgain.hpp"
#include "spacetime.hpp"

namespace kdv5 {

struct PicardParams {
    /// Localization time of the truncated integral equation, in (0, 1/2].
    double T = 0.25;
    /// Number of fixed-point applications after the seed iterate.
    int iterations = 8;
    /// Weight of the contraction norm.
    BourgainWeight weight{0.0, 0.45};
    /// Uniform time levels on [-1, 1), power of two; differences are embedded
    /// into [-2, 2) (same spacing) for the discretized X^{s,b} norm.
    int time_levels = 64;
    double dealias_fraction = 2.0 / 3.0;
};

struct PicardResult {
    /// iterates[0] is eta(t) W(t) u0; iterates[i+1] = Gamma(iterates[i]).
    std::vector<SpaceTimeField> iterates;
    /// Final iterate per-level x-spectra, and those of the linear seed term;
    /// their difference is the integral (Duhamel) part of the fixed point.
    std::vector<SpectralField> limit_spectra;
    std::vector<SpectralField> linear_spectra;
    /// X^{s,b} norms of successive differences and their ratios.
    std::vector<double> diff_norms;
    std::vector<double> ratios;
};

/// Fixed-point iteration of the localized map
///   (Gamma u)(t) = eta(t) W(t) u0
///                + eta(t) integral_0^t W(t - t') eta(t'/(2T)) (-1/2 d_x u^2)(t') dt'
/// by trapezoid quadrature on the level grid. Throws NoContraction when the
/// difference ratio exceeds 1 on three consecutive iterates.
PicardResult picard_iterate(const RealField& u0, const PicardParams& params);

} // namespace kdv5
