#pragma once

#include "grid.hpp"

namespace kdv5 {

/// Real (x, t) samples on a periodic box times a right-open time window
/// [t_lo, t_hi), with a power-of-two number of uniform levels. Carrier of
/// the discretized X^{s,b} and H^{s,b} norms.
class SpaceTimeField {
public:
    SpaceTimeField(const SpatialGrid& g, double t_lo, double t_hi, int levels);

    const SpatialGrid& grid() const { return grid_; }
    int levels() const { return levels_; }
    double t_lo() const { return t_lo_; }
    double t_hi() const { return t_hi_; }
    double dt() const { return (t_hi_ - t_lo_) / levels_; }
    double time(int l) const { return t_lo_ + l * dt(); }

    /// Storage index of time level l, sample m.
    double& at(int l, int m) { return values[static_cast<size_t>(l) * grid_.size() + m]; }
    double at(int l, int m) const { return values[static_cast<size_t>(l) * grid_.size() + m]; }

    RealField level_field(int l) const;
    void set_level(int l, const RealField& f);

    /// Level whose time equals t (throws unless t sits on the grid).
    int level_of(double t) const;

    double window_length() const { return t_hi_ - t_lo_; }
    double delta_tau() const;
    /// tau of dual index r in [0, levels), FFT layout.
    double tau(int r) const;
    double tau_max() const { return delta_tau() * (levels_ / 2); }

    /// 2-D coefficients C[r * n + k] = dx dt / (2 pi) *
    /// sum_{l,m} v(l, m) e^{-i (xi_k x_m + tau_r t_l)}.
    std::vector<complex> transform2d() const;

    /// Space-time L^2 of the samples (the s = b = 0 norm).
    double l2() const;

    std::vector<double> values; // level-major

private:
    SpatialGrid grid_;
    double t_lo_, t_hi_;
    int levels_;
};

/// eta(t / scale) applied level-wise.
SpaceTimeField multiply_bump(const SpaceTimeField& f, double scale);

/// W(-t) applied level-wise: x-spectrum multiplied by e^{+i t xi^5}.
SpaceTimeField conjugate_w(const SpaceTimeField& f);

/// (V f)(t) = integral_0^t W(t - t') f(t') dt', trapezoid in t' on the
/// field's own levels via the factorization W(t - t') = W(t) W(-t').
/// Requires t = 0 on the level grid.
SpaceTimeField duhamel_apply(const SpaceTimeField& f);

/// Zero-pad into a wider window with identical dt and aligned levels.
SpaceTimeField embed_window(const SpaceTimeField& f, double new_lo, double new_hi);

} // namespace kdv5
