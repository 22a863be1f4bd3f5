#include "jump.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "fft.hpp"
#include "propagator.hpp"

namespace kdv5 {

namespace {

constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;

int grid_index_of(const RealField& f, double x0) {
    const SpatialGrid& g = f.grid();
    const double pos = (x0 - g.x0()) / g.spacing();
    const int i = static_cast<int>(std::lround(pos));
    if (i < 8 || i > g.size() - 9 || std::abs(pos - i) > 1e-9)
        throw InvalidArgument("jump_estimate: x0 must be a grid point with >= 8 "
                              "neighbors on each side");
    return i;
}

// second-order one-sided slopes at strides h, 2h, 4h, Richardson-extrapolated
// twice; kills the h^2 and h^3 error terms so smooth fields read ~0 down to
// the h^4 level
double one_sided_jump(const RealField& f, double x0) {
    const int i = grid_index_of(f, x0);
    const double h = f.grid().spacing();
    const auto& s = f.samples;
    auto jump_at = [&](int m) {
        const double right =
            (-3.0 * s[i] + 4.0 * s[i + m] - s[i + 2 * m]) / (2.0 * m * h);
        const double left =
            (3.0 * s[i] - 4.0 * s[i - m] + s[i - 2 * m]) / (2.0 * m * h);
        return right - left;
    };
    const double j1 = jump_at(1), j2 = jump_at(2), j4 = jump_at(4);
    const double r1 = (4.0 * j1 - j2) / 3.0;
    const double r2 = (4.0 * j2 - j4) / 3.0;
    return (8.0 * r1 - r2) / 7.0;
}

struct Band {
    std::vector<int> modes; // storage indices, positive xi side
    double lo = 0.0, hi = 0.0;
};

Band select_band(const SpatialGrid& g, double lo, double hi, double dealias_fraction) {
    if (hi > dealias_fraction * g.xi_max() * (1.0 + 1e-12))
        throw BandTooHigh("band upper edge " + std::to_string(hi) +
                          " exceeds dealiased spectrum limit " +
                          std::to_string(dealias_fraction * g.xi_max()));
    if (!(lo > 0.0) || !(hi > lo))
        throw InvalidArgument("band: need 0 < lo < hi");
    Band b;
    b.lo = lo;
    b.hi = hi;
    for (int k = 1; k < g.size() / 2; ++k) {
        const double xi = g.xi(k);
        if (xi >= lo && xi <= hi) b.modes.push_back(k);
    }
    return b;
}

double spectral_band_jump(const SpectralField& F, double x0, const JumpOptions& opt) {
    const SpatialGrid& g = F.grid();
    const Band band = select_band(g, opt.band_lo_frac * g.xi_max(),
                                  opt.band_hi_frac * g.xi_max(), opt.dealias_fraction);
    const int rows = static_cast<int>(band.modes.size());
    if (rows < 32)
        throw InvalidArgument("spectral_band: band holds " + std::to_string(rows) +
                              " modes, need >= 32");

    Eigen::VectorXd y(rows);
    for (int r = 0; r < rows; ++r) {
        const int k = band.modes[r];
        const double xi = g.xi(k);
        const complex rotated = F.coefficients[k] * std::polar(1.0, xi * x0);
        y(r) = -sqrt_two_pi * xi * xi * rotated.real();
    }

    // m values to deflate, in cadence units
    std::vector<long long> qs;
    for (double m = opt.deflate_m_step; m <= opt.deflate_m_max + 1e-12;
         m += opt.deflate_m_step) {
        const double q = m / opt.cadence_step;
        if (std::abs(q - std::lround(q)) > 1e-9)
            throw InvalidArgument("spectral_band: deflation m grid must sit on the cadence");
        qs.push_back(std::llround(q));
    }

    // shrink the model until it fits the band with headroom. The amplitude
    // polynomials need enough degree: a starved family leaves a smooth
    // residual that the collinear constant-channel shapes amplify into the
    // fitted jump. Keep degree >= 8 and trade away the highest m values on
    // narrow bands instead.
    int n_m = static_cast<int>(qs.size());
    auto budget = [&](int nm) { return (rows - 32 - 5) / (2 * nm) - 1; };
    int degree = n_m > 0 ? std::min(opt.poly_degree, budget(n_m)) : 0;
    while (n_m > 1 && degree < std::min(opt.poly_degree, 8)) {
        --n_m;
        degree = std::min(opt.poly_degree, budget(n_m));
    }
    if (n_m > 0 && degree < 0) n_m = 0;
    const int cols = n_m > 0 ? 5 + 2 * n_m * (degree + 1) : 5;

    const WPhaseTable phases(g, opt.cadence_step);
    Eigen::MatrixXd A(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const int k = band.modes[r];
        const double xi = g.xi(k);
        const double rl = band.lo / xi;
        const double rh = xi / band.hi;
        int c = 0;
        A(r, c++) = 1.0;
        A(r, c++) = rl * rl;
        A(r, c++) = rl * rl * rl * rl;
        A(r, c++) = rh * rh;
        A(r, c++) = rh * rh * rh * rh;
        if (n_m > 0) {
            const double xt = 2.0 * (xi - band.lo) / (band.hi - band.lo) - 1.0;
            std::vector<double> cheb(degree + 1);
            cheb[0] = 1.0;
            if (degree >= 1) cheb[1] = xt;
            for (int p = 2; p <= degree; ++p)
                cheb[p] = 2.0 * xt * cheb[p - 1] - cheb[p - 2];
            for (int mi = 0; mi < n_m; ++mi) {
                const complex ph = phases.power(k, qs[mi]); // e^{-i m xi^5}
                for (int p = 0; p <= degree; ++p) {
                    A(r, c++) = ph.real() * cheb[p];
                    A(r, c++) = ph.imag() * cheb[p];
                }
            }
        }
    }

    Eigen::VectorXd beta = A.colPivHouseholderQr().solve(y);
    return beta(0);
}

} // namespace

double jump_estimate(const RealField& f, double x0, JumpMethod method,
                     const JumpOptions& opt) {
    if (method == JumpMethod::one_sided) return one_sided_jump(f, x0);
    return spectral_band_jump(forward_transform(f), x0, opt);
}

double jump_estimate(const SpectralField& F, double x0, JumpMethod method,
                     const JumpOptions& opt) {
    if (method == JumpMethod::one_sided)
        return one_sided_jump(inverse_transform(F), x0);
    return spectral_band_jump(F, x0, opt);
}

TailFit tail_exponent_fit(const SpectralField& F, double band_lo, double band_hi,
                          double dealias_fraction) {
    const SpatialGrid& g = F.grid();
    const Band band = select_band(g, band_lo, band_hi, dealias_fraction);
    if (static_cast<int>(band.modes.size()) < 32)
        throw InvalidArgument("tail_exponent_fit: band holds fewer than 32 modes");

    TailFit out;
    double mx = 0.0;
    for (int k : band.modes) mx = std::max(mx, std::abs(F.coefficients[k]));
    if (mx < 1e-14) {
        out.degenerate = true;
        return out;
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int k : band.modes) {
        const double a = std::abs(F.coefficients[k]);
        if (a <= 0.0) continue;
        const double lx = std::log(g.xi(k));
        const double ly = std::log(a);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

} // namespace kdv5
