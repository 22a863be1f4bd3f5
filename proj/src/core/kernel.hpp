#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"

namespace kdv5 {

/// Parameters of the bilinear kernel bound: regularity gain a, modulation
/// exponent b, and quadrature controls for the (xi_1, tau_1) integration.
struct KernelParams {
    double a = 0.5;
    double b = 0.45;

    /// Adaptive tolerance of each 1-D quadrature.
    double rel_tol = 1e-4;
    /// Half-width factor of the inner tau_1 window (times max(1, <centers>)).
    double window_factor = 50.0;
    /// xi_1 window is [-xi_cut, xi_cut], xi_cut = max(xi_cut_floor, xi_cut_scale |xi|).
    double xi_cut_floor = 8.0;
    double xi_cut_scale = 4.0;
    /// Cross-check against a refined evaluation; disagreement beyond
    /// refine_tol raises QuadratureNonConvergence.
    bool refine_check = true;
    double refine_tol = 0.01;

    /// The validity region of the lemma: 2/5 < b < 1/2 and 0 <= a <= 10b - 4.
    /// Scans may deliberately leave it for falsification runs.
    bool valid() const { return 0.4 < b && b < 0.5 && 0.0 <= a && a <= 10.0 * b - 4.0; }
};

struct KernelValue {
    double value = 0.0;
    /// Relative disagreement between base and refined evaluation.
    double quad_error = 0.0;
};

/// The kernel supremum integrand
///   <xi>^{2a} |xi|^2 / <tau + xi^5>^{2b} *
///   integral d xi_1 d tau_1 [ <tau_1 + xi_1^5>^{-2b} <tau - tau_1 + (xi - xi_1)^5>^{-2b} ].
/// The inner tau_1 integral is a bracket-pair integral; the outer xi_1
/// integration runs over the window above plus mapped algebraic tails.
KernelValue kernel_integral(double xi, double tau, const KernelParams& p);

/// Closed-form reduced bound (constant 1):
///   <xi>^{2a} |xi|^{1/2} / ( <tau + xi^5>^{2b} <tau + xi^5/16>^{4b - 3/2} ).
/// Requires 3/8 < b < 1/2.
double reduced_bound(double xi, double tau, const KernelParams& p);

/// Both algebraic forms of the resonance function:
///   direct    xi_1^5 + tau + (xi - xi_1)^5
///   completed tau + xi^5/16 + (5/2) xi^3 (xi_1 - xi/2)^2 + 5 xi (xi_1 - xi/2)^4.
std::pair<double, double> mu_forms(double xi, double xi1, double tau);

/// Ratio of the direct inner tau_1 integral to its calculus-lemma bound shape
/// <mu>^{1 - 4b}, maximized over the xi_1 nodes of a fixed lattice. Bounded
/// ratios confirm the exponent-reduction step used by the reduced bound.
double inner_reduction_ratio(double xi, double tau, const KernelParams& p);

struct CalcIneqResult {
    double lhs = 0.0;
    double rhs_shape = 0.0;
    double ratio = 0.0;
};

/// integral <x - a1>^{-beta} <x - a2>^{-gamma} dx against the three-case
/// shape phi_beta(a1 - a2) / <a1 - a2>^gamma. Requires beta >= gamma >= 0,
/// beta + gamma > 1.
CalcIneqResult calc_ineq_ci1(double beta, double gamma, double a1, double a2,
                             double rel_tol = 1e-7);

/// integral <x>^{-rho} |x - a|^{-1/2} dx against <a>^{-(rho - 1/2)}.
/// Requires rho in (1/2, 1).
CalcIneqResult calc_ineq_ci2(double rho, double a, double rel_tol = 1e-8);

struct ScanPoint {
    double xi = 0.0;
    double tau = 0.0;
    double kernel = 0.0;
    double reduced = 0.0;
    double ratio = 0.0;
    double quad_error = 0.0;
};

struct ScanSpec {
    KernelParams params;
    /// Lattice: every (xi, tau) pair. Defaults cover both regimes of the
    /// case split (xi^5 up to +-1024, tau to +-1000).
    std::vector<double> xi_lattice;
    std::vector<double> tau_lattice;
    /// xi samples of the critical curves tau = -xi^5 and tau = -xi^5 / 16;
    /// extends past the lattice so tail exponents are fitted in the
    /// asymptotic range.
    std::vector<double> curve_xi;
    /// |xi| >= this enters the curve tail fits.
    double fit_min_xi = 8.0;

    static ScanSpec defaults(const KernelParams& p);
};

struct ScanReport {
    std::vector<ScanPoint> lattice;
    std::vector<ScanPoint> curve_resonant;  // tau = -xi^5
    std::vector<ScanPoint> curve_sixteenth; // tau = -xi^5/16
    double max_kernel = 0.0;
    /// Fitted global constant: max kernel / reduced over all points.
    double c_star = 0.0;
    double tail_exponent_resonant = 0.0;
    double tail_exponent_sixteenth = 0.0;
};

/// Evaluates kernel and reduced bound over the lattice and curves (parallel
/// over points, deterministic aggregation). Per-point quadrature failures
/// are recorded in quad_error rather than thrown.
ScanReport sup_scan(const ScanSpec& spec);

} // namespace kdv5
