#pragma once

#include <complex>
#include <vector>

#include "errors.hpp"

namespace kdv5 {

using complex = std::complex<double>;

/// Uniform periodic grid on [-L/2, L/2) with n points, n a power of two.
///
/// Wavenumbers follow the usual FFT layout: the signed index k runs over
/// [-n/2, n/2) and xi_k = 2*pi*k / L. The k = -n/2 entry is the single
/// unpaired Nyquist mode.
class SpatialGrid {
public:
    SpatialGrid(int n_points, double box_length);

    int size() const { return n_; }
    double box_length() const { return length_; }
    double spacing() const { return length_ / n_; }
    double delta_xi() const { return two_pi_ / length_; }

    /// Leftmost sample position; x_m = x0() + m * spacing().
    double x0() const { return -0.5 * length_; }
    double x(int m) const { return x0() + m * spacing(); }

    /// Signed mode index for storage index i in [0, n).
    int signed_index(int i) const { return i < n_ / 2 ? i : i - n_; }
    double xi(int i) const { return delta_xi() * signed_index(i); }
    double xi_max() const { return delta_xi() * (n_ / 2); }

    bool operator==(const SpatialGrid& o) const {
        return n_ == o.n_ && length_ == o.length_;
    }
    bool operator!=(const SpatialGrid& o) const { return !(*this == o); }

private:
    int n_;
    double length_;
    static constexpr double two_pi_ = 6.283185307179586476925286766559;
};

/// Real-valued samples of u(.) on a SpatialGrid.
struct RealField {
    RealField() = default;
    RealField(const SpatialGrid& g, std::vector<double> s);
    /// Zero field on g.
    explicit RealField(const SpatialGrid& g);

    const SpatialGrid& grid() const { return grid_; }
    int size() const { return static_cast<int>(samples.size()); }

    double max_abs() const;

    std::vector<double> samples;

private:
    SpatialGrid grid_{8, 1.0};
};

/// Fourier coefficients indexed by wavenumber (FFT layout, see SpatialGrid).
///
/// Coefficients approximate the continuum transform
///   F(xi) = (2*pi)^{-1/2} * integral e^{-i xi x} f(x) dx
/// of the periodic extension; see Fft for the exact discrete convention.
struct SpectralField {
    SpectralField() = default;
    SpectralField(const SpatialGrid& g, std::vector<complex> c);
    explicit SpectralField(const SpatialGrid& g);

    const SpatialGrid& grid() const { return grid_; }
    int size() const { return static_cast<int>(coefficients.size()); }

    /// Max relative deviation from Hermitian symmetry coeff(-xi) = conj(coeff(xi)).
    double hermitian_defect() const;

    std::vector<complex> coefficients;

private:
    SpatialGrid grid_{8, 1.0};
};

} // namespace kdv5
