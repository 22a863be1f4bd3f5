#include "propagator.hpp"

#include <cmath>

#include "spectral.hpp"

namespace kdv5 {

namespace {
constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}
} // namespace

SpectralField apply_w(const SpectralField& F, double t) {
    const SpatialGrid& g = F.grid();
    std::vector<complex> out(F.coefficients);
    for (int k = 0; k < g.size(); ++k)
        out[k] *= std::polar(1.0, -t * xi_fifth(g.xi(k)));
    return SpectralField(g, std::move(out));
}

double phi_hat(double xi) { return 4.0 / (sqrt_two_pi * (xi * xi + 4.0)); }

SpectralField phi_spectrum(const SpatialGrid& g) {
    std::vector<complex> c(g.size());
    for (int k = 0; k < g.size(); ++k) c[k] = phi_hat(g.xi(k));
    // synthesized profiles live on the paired modes; the unpaired Nyquist
    // slot cannot carry a propagating real mode
    c[g.size() / 2] = 0.0;
    return SpectralField(g, std::move(c));
}

RealField phi_field(const SpatialGrid& g) {
    return inverse_transform(phi_spectrum(g));
}

RealField phi_field_sampled(const SpatialGrid& g) {
    const double L = g.box_length();
    std::vector<double> s(g.size());
    for (int m = 0; m < g.size(); ++m) {
        double acc = 0.0;
        for (int img = -3; img <= 3; ++img)
            acc += std::exp(-2.0 * std::abs(g.x(m) + img * L));
        s[m] = acc;
    }
    return RealField(g, std::move(s));
}

BlowupSchedule::BlowupSchedule(std::vector<double> alphas_) : alphas(std::move(alphas_)) {
    for (double a : alphas)
        if (!(a > 0.0)) throw InvalidArgument("BlowupSchedule: all alpha_j must be positive");
}

BlowupSchedule BlowupSchedule::geometric(int j_max, double rate) {
    if (j_max < 0) throw InvalidArgument("BlowupSchedule: J must be >= 0");
    std::vector<double> a(j_max);
    for (int j = 1; j <= j_max; ++j) a[j - 1] = std::pow(rate, j);
    return BlowupSchedule(std::move(a));
}

double BlowupSchedule::summability_sum() const {
    double acc = 0.0;
    for (size_t j = 1; j <= alphas.size(); ++j)
        acc += alphas[j - 1] * std::exp(4.0 * static_cast<double>(j));
    return acc;
}

BlowupDatum build_blowup_datum(const BlowupSchedule& schedule, const SpatialGrid& g,
                               double phase_step) {
    // W(-j) phi through the cadence table: the j-multiplier is an exact
    // integer power of the cadence base, consistent with every other
    // synthesis on the same cadence.
    const double steps_per_unit = 1.0 / phase_step;
    if (std::abs(steps_per_unit - std::lround(steps_per_unit)) > 1e-9)
        throw InvalidArgument("build_blowup_datum: 1 / phase_step must be an integer");
    const long long per_unit = std::llround(steps_per_unit);
    const WPhaseTable phases(g, phase_step);
    std::vector<complex> c(g.size(), complex(0.0, 0.0));
    for (int k = 0; k < g.size(); ++k) {
        const double ph = phi_hat(g.xi(k));
        complex acc(0.0, 0.0);
        for (int j = 1; j <= schedule.truncation(); ++j)
            acc += schedule.alphas[j - 1] * phases.power(k, -per_unit * j);
        c[k] = acc * ph;
    }
    c[g.size() / 2] = 0.0; // unpaired Nyquist mode stays empty (see phi_spectrum)
    BlowupDatum out;
    out.spectrum = SpectralField(g, std::move(c));
    out.field = inverse_transform(out.spectrum);
    out.h1_norm = sobolev_norm(out.spectrum, 1.0);
    return out;
}

complex weighted_multiplier(double xi, double t, WeightDirection dir) {
    const double xi2 = xi * xi;
    double real_exp = t * (5.0 * xi2 * xi2 - 10.0 * xi2 + 1.0);
    if (dir == WeightDirection::backward_weight) real_exp = -real_exp;
    if (std::abs(real_exp) > overflow_guard)
        throw OverflowGuard("weighted_multiplier: real exponent " + std::to_string(real_exp) +
                            " exceeds guard " + std::to_string(overflow_guard) +
                            " (growing regime)");
    const double phase = t * (-xi_fifth(xi) + 10.0 * xi2 * xi - 5.0 * xi);
    return std::exp(real_exp) * std::polar(1.0, phase);
}

complex unit_pow(complex z, long long q) {
    if (q < 0) return std::conj(unit_pow(z, -q));
    complex acc(1.0, 0.0);
    while (q > 0) {
        if (q & 1) acc *= z;
        z *= z;
        q >>= 1;
    }
    return acc;
}

WPhaseTable::WPhaseTable(const SpatialGrid& g, double step)
    : grid_(g), step_(step), base_(g.size()) {
    if (!(step > 0.0)) throw InvalidArgument("WPhaseTable: step must be positive");
    for (int k = 0; k < g.size(); ++k)
        base_[k] = std::polar(1.0, -step * xi_fifth(g.xi(k)));
}

complex WPhaseTable::power(int mode, long long q) const {
    return unit_pow(base_[mode], q);
}

SpectralField WPhaseTable::apply(const SpectralField& F, long long q) const {
    if (F.grid() != grid_) throw InvalidArgument("WPhaseTable: grid mismatch");
    std::vector<complex> out(F.coefficients);
    for (int k = 0; k < grid_.size(); ++k) out[k] *= power(k, q);
    return SpectralField(grid_, std::move(out));
}

} // namespace kdv5
