#pragma once

#include <optional>
#include <string>

#include "bourgain.hpp"
#include "jump.hpp"
#include "kernel.hpp"
#include "picard.hpp"
#include "propagator.hpp"
#include "solver.hpp"

namespace kdv5 {

struct KinkRow {
    double t = 0.0;
    double jump_one_sided = 0.0;
    double jump_spectral = 0.0;
    double tail_exponent = 0.0;
    /// Set when the fit band carried no signal (identically zero field, e.g.
    /// the Duhamel part at t = 0); tail_exponent is then reported as 0.
    bool tail_degenerate = false;
    double h1_norm = 0.0;
    std::vector<double> hs_norms;
};

struct KinkReport {
    std::vector<double> s_list;
    std::vector<KinkRow> rows;
};

struct BlowupExperimentSpec {
    int grid_n = 4096;
    double box_length = 125.66370614359172; // 40 pi
    BlowupSchedule schedule = BlowupSchedule::geometric(6);
    double t_final = 5.0;
    /// Observation grid step; integers and midpoints land on it by the
    /// validation below. Also the W phase cadence of the synthesis.
    double cadence = 0.125;
    /// Explicit observation times (cadence multiples); empty list gives a
    /// header-only report. Unset: the full cadence grid over [0, t_final].
    std::optional<std::vector<double>> observation_times;
    std::vector<double> s_list{0.5, 1.0, 1.45};
    /// When positive, rescale the datum to this H^1 norm.
    double target_h1 = 0.0;
    /// Nonlinear runs only.
    double dt = 1.0 / 64.0;
    bool nonlinearity_on = true;
    JumpOptions jump;
};

/// Free evolution of the blow-up datum with kink diagnostics at every
/// observation time; the fields are synthesized coherently in spectral
/// space, never time-stepped.
KinkReport run_linear_blowup(const BlowupExperimentSpec& spec);

struct NonlinearBlowupReport {
    KinkReport full;    // u(t)
    KinkReport linear;  // W(t) u0
    KinkReport duhamel; // z(t) = u(t) - W(t) u0  (empty when nonlinearity off)
    double rescale_factor = 1.0;
};

/// Full ETD evolution of the rescaled datum; reports diagnostics separately
/// for u, its linear part, and the Duhamel part. Requires target_h1 in
/// (0, 0.01] (the smallness hypothesis of the construction).
NonlinearBlowupReport run_nonlinear_blowup(const BlowupExperimentSpec& spec);

struct RegularityGainSpec {
    double s = 0.0;
    double b = 0.45;
    double a = 0.5;
    double T = 0.25;
    int grid_n = 256;
    double box_length = 125.66370614359172;
    int time_levels = 64;
    int iterations = 6;
    /// Gaussian datum, rescaled to this L^2 norm.
    double datum_l2 = 0.01;
    double sigma = 2.0;
};

struct RegularityGainResult {
    double z_sup_norm = 0.0; // max over [0, T] of ||z(t)||_{H^{s+a}}
    double xsb_sq = 0.0;     // ||u||^2_{X^{s,b}}
    double ratio = 0.0;
    std::vector<double> picard_ratios;
};

/// Ratio max_[0,T] ||z||_{H^{s+a}} / ||u||^2_{X^{s,b}} where u is the Picard
/// fixed point and z its integral part. Hypotheses of the gain estimate:
/// s >= 0, 2/5 < b < 1/2, 0 <= a <= 10 b - 4.
RegularityGainResult run_regularity_gain(const RegularityGainSpec& spec);

/// CSV emission (full-precision floats, mandatory header row).
void write_kink_csv(const KinkReport& report, const std::string& path);
void write_scan_csv(const ScanReport& report, const std::string& path);

/// Config-driven experiment runner behind the CLI and the C API.
/// kind: simulate | blowup | kernel-scan | lemma-check | norms.
/// Validation is fail-closed (unknown keys are rejected). Returns the
/// summary JSON (also written to the configured path, if any).
std::string run_experiment(const std::string& kind, const std::string& config_json);

} // namespace kdv5
