#include "picard.hpp"

#include <cmath>

#include "bump.hpp"
#include "fft.hpp"
#include "spectral.hpp"

namespace kdv5 {

namespace {

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}

using LevelSpectra = std::vector<std::vector<complex>>;

SpaceTimeField to_field(const SpatialGrid& g, const LevelSpectra& spectra, double t_lo,
                        double t_hi) {
    SpaceTimeField out(g, t_lo, t_hi, static_cast<int>(spectra.size()));
    for (size_t l = 0; l < spectra.size(); ++l)
        out.set_level(static_cast<int>(l), inverse_transform(SpectralField(g, spectra[l])));
    return out;
}

} // namespace

PicardResult picard_iterate(const RealField& u0, const PicardParams& params) {
    if (!(params.T > 0.0) || params.T > 0.5)
        throw ParameterViolation("picard_iterate: T must lie in (0, 1/2]");
    if (params.iterations < 0)
        throw InvalidArgument("picard_iterate: iteration count must be >= 0");

    const SpatialGrid& g = u0.grid();
    const int n = g.size();
    const int m = params.time_levels;
    const double t_lo = -1.0, t_hi = 1.0;
    const double h = (t_hi - t_lo) / m;
    const int l0 = m / 2; // t = 0

    const SpectralField U0 = forward_transform(u0);

    // dealias mask for the quadratic term
    std::vector<double> mask(n, 1.0);
    const int keep = static_cast<int>(std::floor(params.dealias_fraction * (n / 2)));
    for (int k = 0; k < n; ++k)
        if (std::abs(g.signed_index(k)) > keep) mask[k] = 0.0;
    mask[n / 2] = 0.0;

    // per-level propagator phases e^{-i t_l xi^5} and cutoffs
    std::vector<std::vector<complex>> wphase(m, std::vector<complex>(n));
    std::vector<double> eta_t(m), eta_inner(m);
    for (int l = 0; l < m; ++l) {
        const double t = t_lo + l * h;
        eta_t[l] = bump(t);
        eta_inner[l] = bump_eval(t, 2.0 * params.T);
        for (int k = 0; k < n; ++k)
            wphase[l][k] = std::polar(1.0, -t * xi_fifth(g.xi(k)));
    }

    // seed iterate eta(t) W(t) u0
    LevelSpectra linear(m, std::vector<complex>(n));
    for (int l = 0; l < m; ++l)
        for (int k = 0; k < n; ++k)
            linear[l][k] = eta_t[l] * wphase[l][k] * U0.coefficients[k];

    PicardResult result;
    result.iterates.push_back(to_field(g, linear, t_lo, t_hi));

    LevelSpectra current = linear;
    const double fwd_scale = g.spacing() / 2.5066282746310005;
    const double inv_scale = 2.5066282746310005 / (g.spacing() * n);
    std::vector<complex> buf(n);

    auto gamma = [&](const LevelSpectra& in) {
        // F_T levels: eta(t/(2T)) * (-i xi / 2) * dealias((u^2)^), then the
        // cumulative trapezoid in the W-interaction picture
        LevelSpectra P(m, std::vector<complex>(n));
        for (int l = 0; l < m; ++l) {
            for (int k = 0; k < n; ++k)
                buf[k] = in[l][k] * ((k & 1) ? -inv_scale : inv_scale);
            fft::inverse_raw(buf.data(), n);
            for (int i = 0; i < n; ++i) {
                const double u = buf[i].real();
                buf[i] = u * u;
            }
            fft::forward_raw(buf.data(), n);
            for (int k = 0; k < n; ++k) {
                const complex sq = buf[k] * ((k & 1) ? -fwd_scale : fwd_scale);
                const complex ft =
                    eta_inner[l] * complex(0.0, -0.5 * g.xi(k)) * (mask[k] * sq);
                // interaction picture: conj(wphase) = e^{+i t xi^5}
                P[l][k] = std::conj(wphase[l][k]) * ft;
            }
        }
        LevelSpectra S(m, std::vector<complex>(n, complex(0.0, 0.0)));
        for (int l = l0 + 1; l < m; ++l)
            for (int k = 0; k < n; ++k)
                S[l][k] = S[l - 1][k] + 0.5 * h * (P[l - 1][k] + P[l][k]);
        for (int l = l0 - 1; l >= 0; --l)
            for (int k = 0; k < n; ++k)
                S[l][k] = S[l + 1][k] - 0.5 * h * (P[l][k] + P[l + 1][k]);
        LevelSpectra out(m, std::vector<complex>(n));
        for (int l = 0; l < m; ++l)
            for (int k = 0; k < n; ++k)
                out[l][k] = linear[l][k] + eta_t[l] * wphase[l][k] * S[l][k];
        return out;
    };

    auto diff_norm = [&](const LevelSpectra& a, const LevelSpectra& b) {
        SpaceTimeField d(g, t_lo, t_hi, m);
        for (int l = 0; l < m; ++l) {
            std::vector<complex> dk(n);
            for (int k = 0; k < n; ++k) dk[k] = a[l][k] - b[l][k];
            d.set_level(l, inverse_transform(SpectralField(g, std::move(dk))));
        }
        return xsb_norm(embed_window(d, -2.0, 2.0), params.weight);
    };

    int rising = 0;
    for (int it = 0; it < params.iterations; ++it) {
        LevelSpectra next = gamma(current);
        result.diff_norms.push_back(diff_norm(next, current));
        if (result.diff_norms.size() >= 2) {
            const double prev = result.diff_norms[result.diff_norms.size() - 2];
            const double ratio = prev > 0.0 ? result.diff_norms.back() / prev
                                            : 0.0;
            result.ratios.push_back(ratio);
            rising = ratio > 1.0 ? rising + 1 : 0;
            if (rising >= 3)
                throw NoContraction("picard_iterate: difference ratio exceeded 1 on three "
                                    "consecutive iterates (datum too large or T too long)");
        }
        current = std::move(next);
        result.iterates.push_back(to_field(g, current, t_lo, t_hi));
        if (result.diff_norms.back() == 0.0) break;
    }

    result.limit_spectra.reserve(m);
    result.linear_spectra.reserve(m);
    for (int l = 0; l < m; ++l) {
        result.limit_spectra.emplace_back(g, current[l]);
        result.linear_spectra.emplace_back(g, linear[l]);
    }
    return result;
}

} // namespace kdv5
