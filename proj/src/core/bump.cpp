#include "bump.hpp"

#include <cmath>

#include "errors.hpp"

namespace kdv5 {

namespace {
double psi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// smooth step: 0 at x <= 0, 1 at x >= 1
double smooth_step(double x) {
    const double a = psi(x);
    const double b = psi(1.0 - x);
    return a / (a + b);
}
} // namespace

double bump(double t) {
    const double a = std::abs(t);
    if (a <= 0.5) return 1.0;
    if (a >= 1.0) return 0.0;
    return smooth_step(2.0 - 2.0 * a);
}

double bump_eval(double t, double scale) {
    if (!(scale > 0.0)) throw InvalidArgument("bump_eval: scale must be positive");
    return bump(t / scale);
}

} // namespace kdv5
