#pragma once

#include <functional>

namespace kdv5 {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol = 1e-8, double abs_tol = 1e-300,
                              int max_depth = 40);

/// integral over R of <x - c1>^{-p} <x - c2>^{-q} dx, p + q > 1.
///
/// Core window [min(c) - W, max(c) + W] with W = window_factor * max(1, <c1>, <c2>)
/// split at the bracket kinks; the algebraic tails are integrated by a
/// three-term 1/x expansion, so the window truncation does not bias the value.
double bracket_pair_integral(double p, double q, double c1, double c2,
                             double rel_tol = 1e-7, double window_factor = 50.0);

/// integral over R of <x>^{-rho} |x - a|^{-1/2} dx, rho in (1/2, 1).
/// The integrable singularity is removed by the substitution u = sqrt(|x - a|).
double bracket_sqrt_integral(double rho, double a, double rel_tol = 1e-8,
                             double window_factor = 50.0);

} // namespace kdv5
