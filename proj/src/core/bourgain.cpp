#include "bourgain.hpp"

#include <cmath>
#include <random>

#include "bump.hpp"
#include "fft.hpp"
#include "spectral.hpp"

namespace kdv5 {

namespace {

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}

double weighted_norm(const SpaceTimeField& f, const BourgainWeight& w, bool shift_by_xi5) {
    const std::vector<complex> C = f.transform2d();
    const SpatialGrid& g = f.grid();
    const int n = g.size();
    const int m = f.levels();
    double acc = 0.0;
    for (int r = 0; r < m; ++r) {
        const double tau = f.tau(r);
        const complex* row = C.data() + static_cast<size_t>(r) * n;
        for (int k = 0; k < n; ++k) {
            const double xi = g.xi(k);
            const double mod = shift_by_xi5 ? tau + xi_fifth(xi) : tau;
            double weight = 1.0;
            if (w.s != 0.0) weight *= std::pow(bracket(xi), 2.0 * w.s);
            if (w.b != 0.0) weight *= std::pow(bracket(mod), 2.0 * w.b);
            acc += weight * std::norm(row[k]);
        }
    }
    return std::sqrt(acc * g.delta_xi() * f.delta_tau());
}

} // namespace

double xsb_norm(const SpaceTimeField& f, const BourgainWeight& w) {
    return weighted_norm(f, w, true);
}

double hsb_norm(const SpaceTimeField& f, const BourgainWeight& w) {
    return weighted_norm(f, w, false);
}

double conjugation_residual(const SpaceTimeField& f, const BourgainWeight& w) {
    const double x = xsb_norm(f, w);
    const double h = hsb_norm(conjugate_w(f), w);
    return std::abs(x - h) / x;
}

double commensurate_box_length(double window_length) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::pow(window_length * two_pi * two_pi * two_pi * two_pi, 0.2);
}

RealField random_band_limited(const SpatialGrid& g, int max_mode, std::uint64_t seed,
                              double amplitude) {
    if (max_mode >= g.size() / 2)
        throw InvalidArgument("random_band_limited: max_mode exceeds the grid spectrum");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = g.size();
    SpectralField F(g);
    F.coefficients[0] = amplitude * u(rng);
    for (int k = 1; k <= max_mode; ++k) {
        const complex c(amplitude * u(rng), amplitude * u(rng));
        F.coefficients[k] = c;
        F.coefficients[n - k] = std::conj(c);
    }
    return inverse_transform(F);
}

namespace {

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!(ys[i] > 0.0)) continue;
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// eta(t) W(t) u0 assembled level by level
SpaceTimeField localized_free_evolution(const SpectralField& U0, double window_lo,
                                        double window_hi, int levels) {
    const SpatialGrid& g = U0.grid();
    SpaceTimeField out(g, window_lo, window_hi, levels);
    for (int l = 0; l < levels; ++l) {
        const double t = out.time(l);
        const double eta = bump(t);
        if (eta == 0.0) continue;
        SpectralField Ft = U0;
        for (int k = 0; k < g.size(); ++k)
            Ft.coefficients[k] *= std::polar(eta, -t * xi_fifth(g.xi(k)));
        out.set_level(l, inverse_transform(Ft));
    }
    return out;
}

SpaceTimeField separable_field(const SpatialGrid& g, const RealField& gx, double t_sigma,
                               double window_lo, double window_hi, int levels) {
    SpaceTimeField out(g, window_lo, window_hi, levels);
    for (int l = 0; l < levels; ++l) {
        const double t = out.time(l);
        const double h = std::exp(-t * t / (2.0 * t_sigma * t_sigma));
        for (int m = 0; m < g.size(); ++m) out.at(l, m) = h * gx.samples[m];
    }
    return out;
}

void check_band_limit(const LemmaProbeParams& p, const SpaceTimeField& probe_window) {
    const double xi_content = p.max_mode * 2.0 * 3.14159265358979324 / p.box_length;
    if (xi_fifth(xi_content) > 0.5 * probe_window.tau_max())
        throw ParameterViolation(
            "lemma probe: content violates the tau-alias cutoff |xi|^5 <= tau_max/2; "
            "lower max_mode or raise time_levels");
}

} // namespace

LemmaProbeResult lemma_scaling_probe(LemmaId id, const LemmaProbeParams& p,
                                     const std::vector<double>& t_list) {
    if (t_list.empty()) throw InvalidArgument("lemma probe: empty T list");
    for (double t : t_list)
        if (!(t > 0.0) || t > 1.0)
            throw ParameterViolation("lemma probe: T values must lie in (0, 1]");

    const SpatialGrid g(p.grid_n, p.box_length);
    LemmaProbeResult out;
    out.t_list = t_list;

    if (id == LemmaId::le1) {
        // norms are homogeneous of degree 1, so lhs/rhs is draw-dependent only
        for (size_t i = 0; i < t_list.size(); ++i) {
            RealField u0 = random_band_limited(g, p.max_mode, p.seed + i);
            SpectralField U0 = forward_transform(u0);
            SpaceTimeField field =
                localized_free_evolution(U0, p.window_lo, p.window_hi, p.time_levels);
            check_band_limit(p, field);
            const double lhs = xsb_norm(field, {p.s, p.b});
            const double rhs = sobolev_norm(U0, p.s);
            out.lhs.push_back(lhs);
            out.rhs.push_back(rhs);
            out.ratios.push_back(lhs / rhs);
            if (i == 0) {
                SpectralField U2 = U0;
                for (auto& c : U2.coefficients) c *= 2.0;
                SpaceTimeField f2 =
                    localized_free_evolution(U2, p.window_lo, p.window_hi, p.time_levels);
                const double r2 = xsb_norm(f2, {p.s, p.b}) / sobolev_norm(U2, p.s);
                out.scaling_invariance = std::abs(r2 - out.ratios[0]) / out.ratios[0];
            }
        }
        for (double r : out.ratios) out.fitted_constant = std::max(out.fitted_constant, r);
        return out;
    }

    if (id == LemmaId::le2) {
        if (!(-0.5 < p.b_prime) || !(p.b_prime <= 0.0) || !(0.0 <= p.b) ||
            !(p.b <= p.b_prime + 1.0))
            throw ParameterViolation("le2 probe: need -1/2 < b' <= 0 <= b <= b' + 1");
        out.claimed_exponent = 1.0 - p.b + p.b_prime;
    } else {
        if (!(-0.5 < p.b) || !(p.b < p.b_prime) || !(p.b_prime < 0.5))
            throw ParameterViolation("le3 probe: need -1/2 < b1 < b2 < 1/2");
        out.claimed_exponent = p.b_prime - p.b;
    }

    RealField gx = random_band_limited(g, p.max_mode, p.seed);
    SpaceTimeField F =
        separable_field(g, gx, p.t_sigma, p.window_lo, p.window_hi, p.time_levels);
    check_band_limit(p, F);

    SpaceTimeField base = (id == LemmaId::le2) ? duhamel_apply(F) : F;
    const double rhs = xsb_norm(F, {p.s, p.b_prime});
    const BourgainWeight lhs_weight{p.s, p.b};

    for (double T : t_list) {
        SpaceTimeField localized = multiply_bump(base, T);
        const double lhs = xsb_norm(localized, lhs_weight);
        out.lhs.push_back(lhs);
        out.rhs.push_back(rhs);
        out.ratios.push_back(lhs / (std::pow(T, out.claimed_exponent) * rhs));
    }
    out.fitted_slope = loglog_slope(out.t_list, out.lhs);
    for (double r : out.ratios) out.fitted_constant = std::max(out.fitted_constant, r);
    return out;
}

} // namespace kdv5
