#pragma once

#include "grid.hpp"

namespace kdv5 {

struct SolverConfig {
    double dt = 1e-3;
    double t_final = 0.1;
    double dealias_fraction = 2.0 / 3.0;
    bool nonlinearity_on = true;
    /// Requested snapshot times; 0 and t_final are always recorded.
    std::vector<double> snapshot_times;
    /// Numerical blow-up guard: abort when an L^2 snapshot norm exceeds
    /// this factor times the initial norm.
    double instability_factor = 1e6;
};

struct Diagnostics {
    double mass = 0.0;        // integral u dx
    double l2 = 0.0;          // integral u^2 dx
    double hamiltonian = 0.0; // integral ( (u_xx)^2 / 2 + u^3 / 6 ) dx
};

struct Snapshot {
    double time = 0.0;
    RealField field;
    SpectralField spectrum;
    /// u0 propagated by the integrator's own per-step linear multipliers;
    /// duhamel_part subtracts this so the linear content cancels to roundoff.
    SpectralField linear_part;
    Diagnostics diagnostics;
};

struct Trajectory {
    SolverConfig config;
    std::vector<Snapshot> snapshots;
};

/// Nonlinear-transport step limit: dt_max = 0.5 / (xi_dealiased_max * max|u0|).
/// The linear scale is unconstrained (the phase is exact).
double dt_max(const RealField& u0, const SolverConfig& config);

/// Exponential time differencing (fourth order, Cox-Matthews coefficients by
/// a 16-point unit-circle contour) with exact linear phase e^{-i dt xi^5};
/// the quadratic term is evaluated pseudo-spectrally with 2/3 dealiasing.
/// With nonlinearity_on = false the snapshots are direct multiplier
/// applications of W(t), bit-identical to apply_w.
Trajectory evolve(const RealField& u0, const SolverConfig& config);

/// z(t) = u(t) - W(t) u0 per snapshot: the Duhamel (integral) part.
std::vector<std::pair<double, RealField>> duhamel_part(const Trajectory& traj);

Diagnostics conserved_quantities(const RealField& f);

} // namespace kdv5
