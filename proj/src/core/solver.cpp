#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fft.hpp"
#include "propagator.hpp"
#include "spectral.hpp"

namespace kdv5 {

namespace {

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}

// ETD Runge-Kutta 4 coefficients for one step size, per mode
struct EtdCoeffs {
    std::vector<complex> e_full, e_half; // exact linear phases
    std::vector<complex> q, f1, f2, f3;  // contour-evaluated phi combinations
};

EtdCoeffs make_coeffs(const SpatialGrid& g, double h) {
    const int n = g.size();
    EtdCoeffs c;
    c.e_full.resize(n);
    c.e_half.resize(n);
    c.q.resize(n);
    c.f1.resize(n);
    c.f2.resize(n);
    c.f3.resize(n);
    constexpr int m_contour = 16;
    constexpr double pi = 3.14159265358979323846;
    for (int k = 0; k < n; ++k) {
        const complex hl(0.0, -h * xi_fifth(g.xi(k)));
        c.e_full[k] = std::exp(hl);
        c.e_half[k] = std::exp(0.5 * hl);
        // mean over a unit circle centered at h*L; the integrands are entire,
        // so the trapezoid mean recovers them to roundoff while avoiding the
        // z -> 0 cancellation
        complex q(0), f1(0), f2(0), f3(0);
        for (int j = 0; j < m_contour; ++j) {
            const complex z = hl + std::polar(1.0, 2.0 * pi * (j + 0.5) / m_contour);
            const complex ez = std::exp(z);
            const complex z2 = z * z;
            const complex z3 = z2 * z;
            q += (std::exp(0.5 * z) - 1.0) / z;
            f1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z2)) / z3;
            f2 += (2.0 + z + ez * (z - 2.0)) / z3;
            f3 += (-4.0 - 3.0 * z - z2 + ez * (4.0 - z)) / z3;
        }
        const double w = h / m_contour;
        c.q[k] = q * w;
        c.f1[k] = f1 * w;
        c.f2[k] = f2 * w;
        c.f3[k] = f3 * w;
    }
    return c;
}

// nonlinear term N(u)^ = -(i xi / 2) * dealias( (u^2)^ )
class NonlinearOp {
public:
    NonlinearOp(const SpatialGrid& g, double dealias_fraction) : grid_(g) {
        const int n = g.size();
        mask_.assign(n, 1.0);
        const int keep = static_cast<int>(std::floor(dealias_fraction * (n / 2)));
        for (int k = 0; k < n; ++k)
            if (std::abs(g.signed_index(k)) > keep) mask_[k] = 0.0;
        mask_[n / 2] = 0.0;
        buf_.resize(n);
    }

    void apply(const std::vector<complex>& uhat, std::vector<complex>& out,
               double* max_abs_u = nullptr) {
        const int n = grid_.size();
        const double inv_scale = 2.5066282746310005 / (grid_.spacing() * n);
        for (int k = 0; k < n; ++k)
            buf_[k] = uhat[k] * ((k & 1) ? -inv_scale : inv_scale);
        fft::inverse_raw(buf_.data(), n);
        double mx = 0.0;
        for (int m = 0; m < n; ++m) {
            const double u = buf_[m].real();
            mx = std::max(mx, std::abs(u));
            buf_[m] = u * u;
        }
        if (max_abs_u) *max_abs_u = mx;
        fft::forward_raw(buf_.data(), n);
        const double fwd_scale = grid_.spacing() / 2.5066282746310005;
        for (int k = 0; k < n; ++k) {
            const complex sq = buf_[k] * ((k & 1) ? -fwd_scale : fwd_scale);
            out[k] = complex(0.0, -0.5 * grid_.xi(k)) * (mask_[k] * sq);
        }
    }

private:
    SpatialGrid grid_;
    std::vector<double> mask_;
    std::vector<complex> buf_;
};

std::vector<double> snapshot_schedule(const SolverConfig& config) {
    std::vector<double> times = config.snapshot_times;
    times.push_back(0.0);
    times.push_back(config.t_final);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                times.end());
    if (times.front() < 0.0 || times.back() > config.t_final + 1e-12)
        throw InvalidArgument("evolve: snapshot times must lie in [0, t_final]");
    return times;
}

} // namespace

double dt_max(const RealField& u0, const SolverConfig& config) {
    const double xi_d = config.dealias_fraction * u0.grid().xi_max();
    const double umax = u0.max_abs();
    if (xi_d * umax == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 / (xi_d * umax);
}

Diagnostics conserved_quantities(const RealField& f) {
    Diagnostics d;
    const double dx = f.grid().spacing();
    RealField uxx = inverse_transform(spectral_derivative(forward_transform(f), 2));
    for (int m = 0; m < f.size(); ++m) {
        const double u = f.samples[m];
        d.mass += u;
        d.l2 += u * u;
        d.hamiltonian += 0.5 * uxx.samples[m] * uxx.samples[m] + u * u * u / 6.0;
    }
    d.mass *= dx;
    d.l2 *= dx;
    d.hamiltonian *= dx;
    return d;
}

Trajectory evolve(const RealField& u0, const SolverConfig& config) {
    const SpatialGrid& g = u0.grid();
    if (!(config.t_final > 0.0)) throw InvalidArgument("evolve: t_final must be positive");
    if (!(config.dt > 0.0)) throw InvalidArgument("evolve: dt must be positive");
    if (config.nonlinearity_on && config.dt > dt_max(u0, config) * (1.0 + 1e-12))
        throw InvalidArgument("evolve: dt exceeds the stability rule dt_max = " +
                              std::to_string(dt_max(u0, config)));

    const std::vector<double> times = snapshot_schedule(config);
    Trajectory traj;
    traj.config = config;

    SpectralField U0 = forward_transform(u0);

    auto record = [&](double t, const SpectralField& spec, const SpectralField& lin) {
        Snapshot s;
        s.time = t;
        s.spectrum = spec;
        s.linear_part = lin;
        s.field = inverse_transform(spec);
        s.diagnostics = conserved_quantities(s.field);
        traj.snapshots.push_back(std::move(s));
    };

    if (!config.nonlinearity_on) {
        for (double t : times) {
            SpectralField st = apply_w(U0, t);
            record(t, st, st);
        }
        return traj;
    }

    const double initial_l2 = l2_norm(u0);
    NonlinearOp nl(g, config.dealias_fraction);
    const int n = g.size();
    std::vector<complex> u = U0.coefficients;
    std::vector<complex> lin = U0.coefficients;
    std::vector<complex> nu(n), na(n), nb(n), nc(n), a(n), b(n), cst(n);

    std::map<long long, EtdCoeffs> coeff_cache; // keyed by rounded step size
    auto coeffs_for = [&](double h) -> const EtdCoeffs& {
        const long long key = std::llround(h * 1e15);
        auto it = coeff_cache.find(key);
        if (it == coeff_cache.end()) it = coeff_cache.emplace(key, make_coeffs(g, h)).first;
        return it->second;
    };

    record(times[0], SpectralField(g, u), SpectralField(g, lin));
    for (size_t seg = 0; seg + 1 < times.size(); ++seg) {
        const double span = times[seg + 1] - times[seg];
        const int steps = std::max(1, static_cast<int>(std::ceil(span / config.dt - 1e-9)));
        const double h = span / steps;
        const EtdCoeffs& c = coeffs_for(h);
        for (int step = 0; step < steps; ++step) {
            nl.apply(u, nu);
            for (int k = 0; k < n; ++k) a[k] = c.e_half[k] * u[k] + c.q[k] * nu[k];
            nl.apply(a, na);
            for (int k = 0; k < n; ++k) b[k] = c.e_half[k] * u[k] + c.q[k] * na[k];
            nl.apply(b, nb);
            for (int k = 0; k < n; ++k)
                cst[k] = c.e_half[k] * a[k] + c.q[k] * (2.0 * nb[k] - nu[k]);
            nl.apply(cst, nc);
            for (int k = 0; k < n; ++k) {
                u[k] = c.e_full[k] * u[k] + c.f1[k] * nu[k] +
                       2.0 * c.f2[k] * (na[k] + nb[k]) + c.f3[k] * nc[k];
                lin[k] *= c.e_full[k];
            }
        }
        SpectralField spec(g, u);
        record(times[seg + 1], spec, SpectralField(g, lin));
        const double norm_now = sobolev_norm(spec, 0.0);
        if (!std::isfinite(norm_now) ||
            norm_now > config.instability_factor * std::max(initial_l2, 1e-300))
            throw Instability("evolve: L^2 norm " + std::to_string(norm_now) + " at t = " +
                              std::to_string(times[seg + 1]) + " exceeds " +
                              std::to_string(config.instability_factor) + " x initial");
    }
    return traj;
}

std::vector<std::pair<double, RealField>> duhamel_part(const Trajectory& traj) {
    std::vector<std::pair<double, RealField>> out;
    out.reserve(traj.snapshots.size());
    for (const Snapshot& s : traj.snapshots) {
        SpectralField z = s.spectrum;
        for (int k = 0; k < z.size(); ++k)
            z.coefficients[k] -= s.linear_part.coefficients[k];
        out.emplace_back(s.time, inverse_transform(z));
    }
    return out;
}

} // namespace kdv5
