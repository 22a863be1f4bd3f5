#pragma once

#include "fft.hpp"
#include "grid.hpp"

namespace kdv5 {

/// Free propagator W(t): coefficient-wise multiplication by e^{-i t xi^5}.
/// Exactly unitary in every H^s norm. Phases at large |t| * xi^5 carry the
/// usual argument-rounding noise of doubles; time-cadenced experiments use
/// WPhaseTable instead, which keeps phases coherent across times.
SpectralField apply_w(const SpectralField& F, double t);

/// Closed-form transform of phi(x) = e^{-2|x|}: 4 / (sqrt(2 pi) (xi^2 + 4)).
double phi_hat(double xi);

/// Canonical periodized phi on the grid, synthesized from phi_hat so that
/// forward_transform reproduces the closed form to machine precision.
RealField phi_field(const SpatialGrid& g);
SpectralField phi_spectrum(const SpatialGrid& g);

/// Pointwise samples of the periodization sum_n phi(x + nL). Carries the
/// O(1/xi_max) sampling alias of the kink spectrum; use where real-space
/// sampling semantics are wanted (finite-difference jump tests).
RealField phi_field_sampled(const SpatialGrid& g);

/// Truncation J and weights alpha_j of the blow-up datum
///   u0 = sum_{j=1..J} alpha_j W(-j) phi.
struct BlowupSchedule {
    BlowupSchedule() = default;
    explicit BlowupSchedule(std::vector<double> alphas_);

    /// alpha_j = rate^j (default rate e^{-5} keeps sum alpha_j e^{4j} geometric).
    static BlowupSchedule geometric(int j_max, double rate = 6.737946999085467e-3);

    int truncation() const { return static_cast<int>(alphas.size()); }
    /// The summability sum alpha_j e^{4j}; finite by construction, reported
    /// so callers can check their schedule against the convergence condition.
    double summability_sum() const;

    std::vector<double> alphas; // alphas[j-1] = alpha_j
};

struct BlowupDatum {
    RealField field;
    SpectralField spectrum;
    double h1_norm = 0.0;
};

/// Sample sum_{j=1..J} alpha_j W(-j) phi on the grid. J = 0 yields the zero
/// field. Reports the H^1 norm so callers can rescale to meet a smallness
/// target. phase_step is the W cadence the multipliers are powers of; fields
/// later synthesized on the same cadence stay phase-coherent with the datum.
BlowupDatum build_blowup_datum(const BlowupSchedule& schedule, const SpatialGrid& g,
                               double phase_step = 0.125);

enum class WeightDirection { forward_weight, backward_weight };

/// Fourier multiplier of the weighted propagated kernels: forward_weight is
/// the multiplier of w = e^x W(t) phi,
///   e^{-i xi^5 t} e^{5 t xi^4} e^{10 i t xi^3} e^{-10 t xi^2} e^{-5 i t xi} e^t,
/// backward_weight that of w~ = e^{-x} W(t) phi (real-exponent signs flipped).
/// Throws OverflowGuard when |real exponent| exceeds overflow_guard.
complex weighted_multiplier(double xi, double t, WeightDirection dir);

/// Real exponent cap; beneath double overflow, signals the growing regime.
constexpr double overflow_guard = 300.0;

/// Coherent table of W phases on a fixed time cadence. The multiplier for
/// t = q * step is the exact q-th power of one base phase per mode, so fields
/// synthesized at different cadence times stay phase-consistent to a few ulp.
/// Plain e^{-i t xi^5} at xi^5 ~ 1e10 loses ~1e-5 rad to argument rounding,
/// which is fatal for reading kink amplitudes of order e^{-25} at late times.
class WPhaseTable {
public:
    WPhaseTable(const SpatialGrid& g, double step);

    double step() const { return step_; }
    const SpatialGrid& grid() const { return grid_; }

    /// base[mode]^q (negative q conjugates).
    complex power(int mode, long long q) const;

    /// W(q * step) applied to F.
    SpectralField apply(const SpectralField& F, long long q) const;

private:
    SpatialGrid grid_;
    double step_;
    std::vector<complex> base_;
};

/// z^q for unit-modulus z by binary exponentiation (q may be negative).
complex unit_pow(complex z, long long q);

} // namespace kdv5
