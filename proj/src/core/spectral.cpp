#include "spectral.hpp"

#include <cmath>

namespace kdv5 {

double sobolev_norm(const SpectralField& F, double s) {
    const SpatialGrid& g = F.grid();
    const double dxi = g.delta_xi();
    double acc = 0.0;
    for (int k = 0; k < g.size(); ++k) {
        const double w = (s == 0.0) ? 1.0 : std::pow(bracket(g.xi(k)), 2.0 * s);
        acc += w * std::norm(F.coefficients[k]);
    }
    return std::sqrt(acc * dxi);
}

double l2_norm(const RealField& f) {
    double acc = 0.0;
    for (double v : f.samples) acc += v * v;
    return std::sqrt(acc * f.grid().spacing());
}

double l2_distance(const RealField& a, const RealField& b) {
    if (a.grid() != b.grid())
        throw InvalidArgument("l2_distance: fields live on different grids");
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        const double d = a.samples[i] - b.samples[i];
        acc += d * d;
    }
    return std::sqrt(acc * a.grid().spacing());
}

SpectralField spectral_derivative(const SpectralField& F, int m) {
    if (m < 1) throw InvalidArgument("spectral_derivative: order must be >= 1");
    const SpatialGrid& g = F.grid();
    const int n = g.size();
    std::vector<complex> out(n);
    // i^m cycles through {1, i, -1, -i}
    static const complex icycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const complex im = icycle[m & 3];
    for (int k = 0; k < n; ++k) {
        const double xi = g.xi(k);
        out[k] = F.coefficients[k] * im * std::pow(xi, m);
    }
    if (m & 1) out[n / 2] = 0.0;
    return SpectralField(g, std::move(out));
}

} // namespace kdv5
