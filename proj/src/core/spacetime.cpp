#include "spacetime.hpp"

#include <cmath>

#include "bump.hpp"
#include "fft.hpp"

namespace kdv5 {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}

// x-spectra of every level, level-major [l * n + k], project normalization
std::vector<complex> level_spectra(const SpaceTimeField& f) {
    const int n = f.grid().size();
    const int m = f.levels();
    const double scale = f.grid().spacing() / 2.5066282746310005;
    std::vector<complex> out(static_cast<size_t>(m) * n);
    for (int l = 0; l < m; ++l) {
        complex* row = out.data() + static_cast<size_t>(l) * n;
        for (int i = 0; i < n; ++i) row[i] = f.at(l, i);
        fft::forward_raw(row, n);
        for (int k = 0; k < n; ++k) row[k] *= ((k & 1) ? -scale : scale);
    }
    return out;
}

// invert level spectra back into a SpaceTimeField (real parts)
void spectra_to_levels(const std::vector<complex>& spectra, SpaceTimeField& f) {
    const int n = f.grid().size();
    const int m = f.levels();
    const double scale = 2.5066282746310005 / (f.grid().spacing() * n);
    std::vector<complex> row(n);
    for (int l = 0; l < m; ++l) {
        const complex* src = spectra.data() + static_cast<size_t>(l) * n;
        for (int k = 0; k < n; ++k) row[k] = src[k] * ((k & 1) ? -scale : scale);
        fft::inverse_raw(row.data(), n);
        for (int i = 0; i < n; ++i) f.at(l, i) = row[i].real();
    }
}

} // namespace

SpaceTimeField::SpaceTimeField(const SpatialGrid& g, double t_lo, double t_hi, int levels)
    : values(static_cast<size_t>(levels) * g.size(), 0.0),
      grid_(g),
      t_lo_(t_lo),
      t_hi_(t_hi),
      levels_(levels) {
    if (!(t_hi > t_lo)) throw InvalidArgument("SpaceTimeField: empty time window");
    if (levels < 8 || !is_power_of_two(levels))
        throw InvalidArgument("SpaceTimeField: levels must be a power of two >= 8");
}

RealField SpaceTimeField::level_field(int l) const {
    std::vector<double> s(grid_.size());
    for (int m = 0; m < grid_.size(); ++m) s[m] = at(l, m);
    return RealField(grid_, std::move(s));
}

void SpaceTimeField::set_level(int l, const RealField& f) {
    if (f.grid() != grid_) throw InvalidArgument("set_level: grid mismatch");
    for (int m = 0; m < grid_.size(); ++m) at(l, m) = f.samples[m];
}

int SpaceTimeField::level_of(double t) const {
    const double pos = (t - t_lo_) / dt();
    const int l = static_cast<int>(std::lround(pos));
    if (l < 0 || l >= levels_ || std::abs(pos - l) > 1e-9)
        throw InvalidArgument("SpaceTimeField: time " + std::to_string(t) +
                              " is not on the level grid");
    return l;
}

double SpaceTimeField::delta_tau() const { return two_pi / window_length(); }

double SpaceTimeField::tau(int r) const {
    const int rs = r < levels_ / 2 ? r : r - levels_;
    return delta_tau() * rs;
}

std::vector<complex> SpaceTimeField::transform2d() const {
    const int n = grid_.size();
    const int m = levels_;
    std::vector<complex> spectra = level_spectra(*this); // [l * n + k]
    // t-transform per mode; phase reference t_lo
    std::vector<complex> out(static_cast<size_t>(m) * n);
    const double tscale = dt() / 2.5066282746310005;
    std::vector<complex> col(m);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < m; ++l) col[l] = spectra[static_cast<size_t>(l) * n + k];
        fft::forward_raw(col.data(), m);
        for (int r = 0; r < m; ++r) {
            const complex phase = std::polar(tscale, -tau(r) * t_lo_);
            out[static_cast<size_t>(r) * n + k] = col[r] * phase;
        }
    }
    return out;
}

double SpaceTimeField::l2() const {
    double acc = 0.0;
    for (double v : values) acc += v * v;
    return std::sqrt(acc * grid_.spacing() * dt());
}

SpaceTimeField multiply_bump(const SpaceTimeField& f, double scale) {
    SpaceTimeField out = f;
    for (int l = 0; l < f.levels(); ++l) {
        const double w = bump_eval(f.time(l), scale);
        for (int m = 0; m < f.grid().size(); ++m) out.at(l, m) = w * f.at(l, m);
    }
    return out;
}

SpaceTimeField conjugate_w(const SpaceTimeField& f) {
    const int n = f.grid().size();
    std::vector<complex> spectra = level_spectra(f);
    for (int l = 0; l < f.levels(); ++l) {
        const double t = f.time(l);
        complex* row = spectra.data() + static_cast<size_t>(l) * n;
        for (int k = 0; k < n; ++k)
            row[k] *= std::polar(1.0, t * xi_fifth(f.grid().xi(k)));
    }
    SpaceTimeField out(f.grid(), f.t_lo(), f.t_hi(), f.levels());
    spectra_to_levels(spectra, out);
    return out;
}

SpaceTimeField duhamel_apply(const SpaceTimeField& f) {
    const int n = f.grid().size();
    const int m = f.levels();
    const int l0 = f.level_of(0.0);
    const double h = f.dt();

    std::vector<complex> spectra = level_spectra(f);
    // interaction picture P(l, k) = e^{+i t_l xi^5} fhat(l, k)
    for (int l = 0; l < m; ++l) {
        const double t = f.time(l);
        complex* row = spectra.data() + static_cast<size_t>(l) * n;
        for (int k = 0; k < n; ++k)
            row[k] *= std::polar(1.0, t * xi_fifth(f.grid().xi(k)));
    }
    // cumulative trapezoid from t = 0 in both directions
    std::vector<complex> cum(static_cast<size_t>(m) * n, complex(0.0, 0.0));
    auto P = [&](int l) { return spectra.data() + static_cast<size_t>(l) * n; };
    auto S = [&](int l) { return cum.data() + static_cast<size_t>(l) * n; };
    for (int l = l0 + 1; l < m; ++l)
        for (int k = 0; k < n; ++k)
            S(l)[k] = S(l - 1)[k] + 0.5 * h * (P(l - 1)[k] + P(l)[k]);
    for (int l = l0 - 1; l >= 0; --l)
        for (int k = 0; k < n; ++k)
            S(l)[k] = S(l + 1)[k] - 0.5 * h * (P(l)[k] + P(l + 1)[k]);
    // back out of the interaction picture
    for (int l = 0; l < m; ++l) {
        const double t = f.time(l);
        complex* row = S(l);
        for (int k = 0; k < n; ++k)
            row[k] *= std::polar(1.0, -t * xi_fifth(f.grid().xi(k)));
    }
    SpaceTimeField out(f.grid(), f.t_lo(), f.t_hi(), m);
    spectra_to_levels(cum, out);
    return out;
}

SpaceTimeField embed_window(const SpaceTimeField& f, double new_lo, double new_hi) {
    const double h = f.dt();
    const double shift = (f.t_lo() - new_lo) / h;
    const int offset = static_cast<int>(std::lround(shift));
    const int new_levels = static_cast<int>(std::lround((new_hi - new_lo) / h));
    if (std::abs(shift - offset) > 1e-9 ||
        std::abs((new_hi - new_lo) - new_levels * h) > 1e-9 * h)
        throw InvalidArgument("embed_window: target window must align with the level grid");
    if (offset < 0 || offset + f.levels() > new_levels)
        throw InvalidArgument("embed_window: target window does not contain the field");
    SpaceTimeField out(f.grid(), new_lo, new_hi, new_levels);
    for (int l = 0; l < f.levels(); ++l)
        for (int m = 0; m < f.grid().size(); ++m) out.at(l + offset, m) = f.at(l, m);
    return out;
}

} // namespace kdv5
