#include "grid.hpp"

#include <algorithm>
#include <cmath>

namespace kdv5 {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

SpatialGrid::SpatialGrid(int n_points, double box_length)
    : n_(n_points), length_(box_length) {
    if (n_points < 8 || !is_power_of_two(n_points))
        throw InvalidArgument("SpatialGrid: n_points must be a power of two >= 8, got " +
                              std::to_string(n_points));
    if (!(box_length > 0.0) || !std::isfinite(box_length))
        throw InvalidArgument("SpatialGrid: box_length must be positive and finite");
}

RealField::RealField(const SpatialGrid& g, std::vector<double> s)
    : samples(std::move(s)), grid_(g) {
    if (static_cast<int>(samples.size()) != g.size())
        throw InvalidArgument("RealField: sample count " + std::to_string(samples.size()) +
                              " does not match grid size " + std::to_string(g.size()));
}

RealField::RealField(const SpatialGrid& g)
    : samples(g.size(), 0.0), grid_(g) {}

double RealField::max_abs() const {
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
}

SpectralField::SpectralField(const SpatialGrid& g, std::vector<complex> c)
    : coefficients(std::move(c)), grid_(g) {
    if (static_cast<int>(coefficients.size()) != g.size())
        throw InvalidArgument("SpectralField: coefficient count does not match grid size");
}

SpectralField::SpectralField(const SpatialGrid& g)
    : coefficients(g.size(), complex(0.0, 0.0)), grid_(g) {}

double SpectralField::hermitian_defect() const {
    const int n = size();
    double scale = 0.0;
    for (const complex& c : coefficients) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int i = 1; i < n; ++i) {
        // storage index of -k is n - i; Nyquist (i = n/2) pairs with itself
        const complex a = coefficients[i];
        const complex b = std::conj(coefficients[(n - i) % n]);
        worst = std::max(worst, std::abs(a - b));
    }
    worst = std::max(worst, std::abs(coefficients[0].imag()));
    return worst / scale;
}

} // namespace kdv5
