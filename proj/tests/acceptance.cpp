// Acceptance suite: every criterion below runs at its pinned tolerance and
// prints one PASS/FAIL line. The process exits nonzero if any criterion
// fails. Expected runtime is dominated by the kernel scan and the blow-up
// runs (a few minutes total).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "core/bourgain.hpp"
#include "core/bump.hpp"
#include "core/fft.hpp"
#include "core/jump.hpp"
#include "core/kernel.hpp"
#include "core/lab.hpp"
#include "core/picard.hpp"
#include "core/propagator.hpp"
#include "core/solver.hpp"
#include "core/spectral.hpp"
#include "oracles.hpp"

using namespace kdv5;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %s  (%s)\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --------------------------------------------------------------------------
// 1. spectral core
// --------------------------------------------------------------------------
void criterion_spectral_core() {
    const auto t0 = std::chrono::steady_clock::now();
    SpatialGrid g(1024, 40.0 * oracle::pi);
    std::mt19937_64 rng(2024);

    double worst_rt = 0.0, worst_parseval = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        RealField f = oracle::random_trig_field(g, 100, rng, 1.5);
        SpectralField F = forward_transform(f);
        RealField f2 = inverse_transform(F);
        for (int m = 0; m < g.size(); ++m)
            worst_rt = std::max(worst_rt, std::abs(f.samples[m] - f2.samples[m]));
        const double phys = l2_norm(f);
        worst_parseval =
            std::max(worst_parseval, std::abs(phys - sobolev_norm(F, 0.0)) / phys);
    }
    report("1a round trip <= 1e-12", worst_rt <= 1e-12, fmt("max %.3g", worst_rt));
    report("1b Parseval <= 1e-10 relative", worst_parseval <= 1e-10,
           fmt("max %.3g", worst_parseval));

    SpectralField Phi = forward_transform(phi_field(g));
    double worst_phi = 0.0;
    for (double s : {0.0, 1.0, 1.45}) {
        double acc = 0.0;
        for (int k = 0; k < g.size(); ++k) {
            if (k == g.size() / 2) continue; // synthesis excludes the unpaired mode
            acc += std::pow(bracket(g.xi(k)), 2.0 * s) * phi_hat(g.xi(k)) * phi_hat(g.xi(k));
        }
        const double ref = std::sqrt(acc * g.delta_xi());
        worst_phi = std::max(worst_phi, std::abs(sobolev_norm(Phi, s) - ref) / ref);
    }
    const double elapsed = seconds_since(t0);
    report("1c periodized-phi Sobolev vs closed form <= 1e-4 relative",
           worst_phi <= 1e-4, fmt("max %.3g", worst_phi));
    report("1d spectral-core runtime < 1 s", elapsed < 1.0, fmt("%.2f s", elapsed));
}

// --------------------------------------------------------------------------
// 2. propagator
// --------------------------------------------------------------------------
void criterion_propagator() {
    SpatialGrid g(256, 40.0 * oracle::pi);
    std::mt19937_64 rng(7);
    SpectralField F = forward_transform(oracle::random_trig_field(g, 40, rng));

    double worst_group = 0.0, worst_unitary = 0.0;
    for (auto [s, t] : {std::pair{0.4, 0.35}, {1.25, -0.8}, {-2.0, 0.9}}) {
        SpectralField a = apply_w(apply_w(F, s), t);
        SpectralField b = apply_w(F, s + t);
        for (int k = 0; k < g.size(); ++k)
            worst_group = std::max(worst_group, std::abs(a.coefficients[k] - b.coefficients[k]));
        for (double ss : {0.0, 0.45, 1.0, 2.0})
            worst_unitary = std::max(
                worst_unitary,
                std::abs(sobolev_norm(apply_w(F, t), ss) / sobolev_norm(F, ss) - 1.0));
    }
    report("2a W group law <= 1e-12", worst_group <= 1e-12, fmt("max %.3g", worst_group));
    report("2b H^s unitarity <= 1e-12", worst_unitary <= 1e-12,
           fmt("max %.3g", worst_unitary));

    const double mod = std::abs(weighted_multiplier(1.0, -1.0, WeightDirection::forward_weight));
    const double target = std::exp(4.0);
    report("2c weighted-multiplier modulus = e^4 to 1e-10 relative",
           std::abs(mod - target) <= 1e-10 * target, fmt("|m| = %.12f", mod));

    SpatialGrid g4(4096, 40.0 * oracle::pi);
    RealField phi = phi_field_sampled(g4);
    const double j_one = jump_estimate(phi, 0.0, JumpMethod::one_sided);
    const double j_spec = jump_estimate(phi, 0.0, JumpMethod::spectral_band);
    report("2d phi jump (one-sided) = -4 +- 0.05", std::abs(j_one + 4.0) <= 0.05,
           fmt("%.4f", j_one));
    report("2e phi jump (spectral band) = -4 +- 0.05", std::abs(j_spec + 4.0) <= 0.05,
           fmt("%.4f", j_spec));
}

// --------------------------------------------------------------------------
// 3. solver
// --------------------------------------------------------------------------
void criterion_solver() {
    // convergence order
    {
        SpatialGrid g(256, 40.0 * oracle::pi);
        RealField u0 = oracle::gaussian_field(g, 1.5, 2.0);
        auto terminal = [&](double dt) {
            SolverConfig c;
            c.dt = dt;
            c.t_final = 0.5;
            return evolve(u0, c).snapshots.back().field;
        };
        RealField ref = terminal(1.0 / 8192.0);
        std::vector<double> lx, ly;
        for (double dt : {1.0 / 64.0, 1.0 / 128.0, 1.0 / 256.0, 1.0 / 512.0}) {
            lx.push_back(std::log(dt));
            ly.push_back(std::log(l2_distance(terminal(dt), ref)));
        }
        const double slope = slope_fit(lx, ly);
        report("3a ETD convergence slope 4 +- 0.3", std::abs(slope - 4.0) <= 0.3,
               fmt("slope %.3f", slope));
    }
    // conservation drifts
    {
        const auto t0 = std::chrono::steady_clock::now();
        SpatialGrid g(512, 40.0 * oracle::pi);
        RealField u0 = oracle::gaussian_field(g, 0.25, 2.0);
        SolverConfig c;
        c.dt = 2e-3;
        c.t_final = 0.1;
        for (int i = 0; i <= 16; ++i) c.snapshot_times.push_back(0.1 * i / 16.0);
        Trajectory traj = evolve(u0, c);
        double dm = 0.0, dl = 0.0;
        const Diagnostics first = traj.snapshots.front().diagnostics;
        for (const Snapshot& s : traj.snapshots) {
            dm = std::max(dm, std::abs(s.diagnostics.mass - first.mass));
            dl = std::max(dl, std::abs(s.diagnostics.l2 - first.l2));
        }
        const double elapsed = seconds_since(t0);
        report("3b mass drift <= 1e-10", dm <= 1e-10, fmt("%.3g", dm));
        report("3c L2 drift <= 1e-8 in < 10 s", dl <= 1e-8 && elapsed < 10.0,
               fmt("%.3g in %.2f s", dl, elapsed));
    }
    // Duhamel versus independent quadrature
    {
        SpatialGrid g(512, 40.0 * oracle::pi);
        RealField u0 = oracle::gaussian_field(g, 0.25, 2.0);
        SolverConfig c;
        c.dt = 1e-3;
        c.t_final = 0.1;
        const int panels = 128;
        for (int i = 0; i <= panels; ++i) c.snapshot_times.push_back(0.1 * i / panels);
        Trajectory traj = evolve(u0, c);
        auto z = duhamel_part(traj);
        const int n = g.size();
        const int keep = static_cast<int>(std::floor((2.0 / 3.0) * (n / 2)));
        std::vector<complex> acc(n, complex(0.0, 0.0));
        const double h = 0.1 / panels;
        for (int i = 0; i <= panels; ++i) {
            const RealField& ui = traj.snapshots[i].field;
            std::vector<double> sq(n);
            for (int m = 0; m < n; ++m) sq[m] = ui.samples[m] * ui.samples[m];
            SpectralField SQ = forward_transform(RealField(g, std::move(sq)));
            const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            const double tp = traj.snapshots[i].time;
            for (int k = 0; k < n; ++k) {
                if (std::abs(g.signed_index(k)) > keep || k == n / 2) continue;
                const double xi = g.xi(k);
                const double xi5 = xi * xi * xi * xi * xi;
                acc[k] += (w * h / 3.0) * std::polar(1.0, -(0.1 - tp) * xi5) *
                          (complex(0.0, -0.5 * xi) * SQ.coefficients[k]);
            }
        }
        const double z_norm = l2_norm(z.back().second);
        const double err =
            l2_distance(z.back().second, inverse_transform(SpectralField(g, std::move(acc))));
        report("3d Duhamel z vs quadrature oracle <= 1e-4 (L2)", err <= 1e-4,
               fmt("err %.3g with ||z|| = %.3g", err, z_norm));
    }
    // Picard fixed point
    {
        SpatialGrid g(256, 40.0 * oracle::pi);
        RealField gauss = oracle::gaussian_field(g, 1.0, 2.0);
        const double h1 = sobolev_norm(forward_transform(gauss), 1.0);
        RealField u0 = gauss;
        for (auto& v : u0.samples) v *= 0.01 / h1;
        PicardParams p;
        p.T = 0.25;
        p.iterations = 6;
        PicardResult r = picard_iterate(u0, p);
        bool contracting = !r.ratios.empty();
        for (double ratio : r.ratios) contracting = contracting && ratio < 1.0;
        report("3e Picard difference ratios < 1", contracting,
               fmt("first ratio %.3g", r.ratios.empty() ? -1.0 : r.ratios.front()));

        const SpaceTimeField& limit = r.iterates.back();
        SolverConfig c;
        c.dt = 1e-3;
        c.t_final = 0.25;
        std::vector<int> levels;
        for (int l = limit.levels() / 2; l < limit.levels(); ++l) {
            if (limit.time(l) > 0.25 + 1e-12) break;
            levels.push_back(l);
            c.snapshot_times.push_back(limit.time(l));
        }
        Trajectory traj = evolve(u0, c);
        double worst = 0.0;
        for (size_t i = 0; i < levels.size(); ++i)
            worst = std::max(worst, l2_distance(limit.level_field(levels[i]),
                                                traj.snapshots[i].field));
        report("3f Picard limit matches evolve <= 1e-4 (L2)", worst <= 1e-4,
               fmt("max %.3g", worst));
    }
}

// --------------------------------------------------------------------------
// 4. bourgain
// --------------------------------------------------------------------------
void criterion_bourgain() {
    // conjugation identity on the commensurate fixture
    {
        const double L = commensurate_box_length(4.0);
        SpatialGrid g(64, L);
        RealField gx = random_band_limited(g, 3, 17);
        SpaceTimeField f(g, -2.0, 2.0, 1024);
        for (int l = 0; l < f.levels(); ++l) {
            const double t = f.time(l);
            const double w = std::exp(-t * t / (2.0 * 0.25 * 0.25));
            for (int m = 0; m < g.size(); ++m) f.at(l, m) = w * gx.samples[m];
        }
        double worst = 0.0;
        for (auto [s, b] : {std::pair{0.0, 0.45}, {1.0, 0.45}, {0.5, 0.3}})
            worst = std::max(worst, conjugation_residual(f, {s, b}));
        report("4a conjugation identity residual <= 1e-8", worst <= 1e-8,
               fmt("max %.3g", worst));
    }
    // le3 (the T^{b2-b1} localization bound) with refinement stability
    {
        LemmaProbeParams p;
        p.b = 0.0;
        p.b_prime = 0.45;
        p.grid_n = 128;
        p.time_levels = 2048;
        p.max_mode = 32;
        const std::vector<double> ts{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
        LemmaProbeResult coarse = lemma_scaling_probe(LemmaId::le3, p, ts);
        LemmaProbeParams q = p;
        q.grid_n *= 2;
        q.time_levels *= 2;
        LemmaProbeResult fine = lemma_scaling_probe(LemmaId::le3, q, ts);
        bool bounded = std::isfinite(coarse.fitted_constant) && coarse.fitted_constant > 0;
        const double change =
            std::abs(fine.fitted_constant - coarse.fitted_constant) / coarse.fitted_constant;
        report("4b le3 ratios bounded, C stable +- 20% under refinement",
               bounded && change <= 0.2,
               fmt("C = %.3g, change %.3g%%", coarse.fitted_constant, 100.0 * change));
    }
    // le2 slope
    {
        LemmaProbeParams p;
        p.b = 0.525;
        p.b_prime = -0.475;
        p.grid_n = 128;
        p.time_levels = 2048;
        p.max_mode = 32;
        LemmaProbeResult r =
            lemma_scaling_probe(LemmaId::le2, p, {0.5, 0.25, 0.125, 0.0625});
        report("4c le2 slope fit >= 1 - b + b' - 0.1",
               r.fitted_slope >= r.claimed_exponent - 0.1,
               fmt("slope %.3f vs claim %.3f", r.fitted_slope, r.claimed_exponent));
    }
}

// --------------------------------------------------------------------------
// 5. bilinear kernel
// --------------------------------------------------------------------------
double kernel_brute_oracle(double xi, double tau, double a, double b);

void criterion_kernel() {
    const auto t0 = std::chrono::steady_clock::now();
    KernelParams p;
    p.a = 0.5;
    p.b = 0.45;

    // mu identity
    {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> uxi(-10.0, 10.0), utau(-1000.0, 1000.0);
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i) {
            auto [d, c] = mu_forms(uxi(rng), uxi(rng), utau(rng));
            worst = std::max(worst, std::abs(d - c) / (1.0 + std::abs(d)));
        }
        report("5a mu forms agree <= 1e-9 over 1e6 triples", worst <= 1e-9,
               fmt("max %.3g", worst));
    }
    // golden point against the brute-force oracle
    {
        const double ref = kernel_brute_oracle(1.0, 0.0, p.a, p.b);
        const KernelValue got = kernel_integral(1.0, 0.0, p);
        const double rel = std::abs(got.value - ref) / ref;
        report("5b kernel(1, 0; 0.5, 0.45) vs brute force <= 1%", rel <= 0.01,
               fmt("value %.6f vs %.6f", got.value, ref));
    }
    // domination with a refinement-stable constant
    {
        ScanSpec spec = ScanSpec::defaults(p);
        spec.params.rel_tol = 3e-4;
        ScanReport rep = sup_scan(spec);
        bool dominated = rep.c_star > 0.0 && std::isfinite(rep.c_star);
        for (const ScanPoint& pt : rep.lattice)
            dominated = dominated && pt.kernel <= rep.c_star * pt.reduced * (1.0 + 1e-9);
        // refinement: halved lattice step, interleaved curve samples, and a
        // tighter quadrature tolerance
        ScanSpec finer = spec;
        finer.params.rel_tol = 1.5e-4;
        finer.xi_lattice.clear();
        for (int i = 1; i <= 32; ++i) {
            finer.xi_lattice.push_back(0.125 * i);
            finer.xi_lattice.push_back(-0.125 * i);
        }
        for (double xi : {10.0, 14.0, 20.0, 28.0, 40.0, 56.0})
            finer.curve_xi.push_back(xi);
        ScanReport rep2 = sup_scan(finer);
        const double change = std::abs(rep2.c_star - rep.c_star) / rep.c_star;
        report("5c domination kernel <= C* reduced, C* stable +- 20%",
               dominated && change <= 0.2,
               fmt("C* = %.4f, refined %.4f", rep.c_star, rep2.c_star));
    }
    // falsification: a = 10b - 4 + 0.3 grows along tau = -xi^5; the bracket
    // corrections fade like 1/log(xi), so the exponent is fitted out at
    // xi >= 64 where the asymptotic regime has set in
    {
        KernelParams bad = p;
        bad.a = 10.0 * p.b - 4.0 + 0.3;
        bad.rel_tol = 1e-4;
        std::vector<double> lx, ly;
        for (double xi : {64.0, 96.0, 128.0, 192.0, 256.0, 384.0, 512.0}) {
            const double v = kernel_integral(xi, -std::pow(xi, 5.0), bad).value;
            lx.push_back(std::log(xi));
            ly.push_back(std::log(v));
        }
        const double slope = slope_fit(lx, ly);
        report("5d falsification growth exponent 0.6 +- 0.15",
               std::abs(slope - 0.6) <= 0.15, fmt("slope %.3f", slope));
    }
    // calculus inequalities
    {
        double cmax = 0.0;
        for (double sep : {1.0, 10.0, 100.0})
            cmax = std::max(cmax, calc_ineq_ci1(0.9, 0.9, sep, 0.0).ratio);
        bool ci1_ok = std::isfinite(cmax) && cmax > 0.0 && cmax < 100.0;

        std::vector<double> lx, ly;
        const double rho = 0.7; // finite-a corrections ~ a^{rho-1} stay small here
        for (double av : {10.0, 31.6, 100.0, 316.0, 1000.0}) {
            lx.push_back(std::log(av));
            ly.push_back(std::log(calc_ineq_ci2(rho, av).lhs));
        }
        const double slope = slope_fit(lx, ly);
        const bool ci2_ok = std::abs(slope + (rho - 0.5)) <= 0.05;
        report("5e calculus inequalities: ci1 bounded, ci2 decay rho - 1/2 +- 0.05",
               ci1_ok && ci2_ok, fmt("ci1 C %.3g, ci2 slope %.3f", cmax, slope));
    }
    const double elapsed = seconds_since(t0);
    report("5f kernel suite runtime < 5 min", elapsed < 300.0, fmt("%.1f s", elapsed));
}

// --------------------------------------------------------------------------
// 6. dispersive blow-up
// --------------------------------------------------------------------------
void criterion_blowup() {
    const auto t0 = std::chrono::steady_clock::now();
    // linear run, J = 6, alpha_j = e^{-5j}, N = 4096, L = 40 pi
    {
        BlowupExperimentSpec spec;
        KinkReport rep = run_linear_blowup(spec);
        bool integers_ok = true, midpoints_ok = true, tails_ok = true;
        std::string det_int, det_tail;
        for (int n = 1; n <= 5; ++n) {
            const double alpha = std::exp(-5.0 * n);
            const KinkRow& row = rep.rows[8 * n];
            const KinkRow& mid = rep.rows[8 * n - 4];
            if (std::abs(row.jump_spectral + 4.0 * alpha) > 0.1 * 4.0 * alpha)
                integers_ok = false;
            if (std::abs(mid.jump_spectral) > 0.1 * 4.0 * alpha) midpoints_ok = false;
            if (std::abs(row.tail_exponent + 2.0) > 0.2) tails_ok = false;
            if (n == 5) {
                det_int = fmt("t=5: %.4g vs -4 a_5 = %.4g", row.jump_spectral,
                              -4.0 * alpha);
                det_tail = fmt("t=5 tail %.3f", row.tail_exponent);
            }
        }
        report("6a linear jumps at integers = -4 alpha_n +- 10%", integers_ok, det_int);
        report("6b linear midpoint jumps <= 0.1 * 4 alpha_n", midpoints_ok,
               fmt("t=4.5 jump %.3g vs cap %.3g", rep.rows[36].jump_spectral,
                   0.4 * std::exp(-20.0)));
        report("6c linear integer-time tail exponent -2 +- 0.2", tails_ok, det_tail);
    }
    // nonlinear run: z(t) stays smooth
    {
        BlowupExperimentSpec spec;
        spec.t_final = 3.0;
        spec.target_h1 = 0.01;
        NonlinearBlowupReport rep = run_nonlinear_blowup(spec);
        bool z_jumps_ok = true, z_tails_ok = true;
        std::string det;
        for (int n = 1; n <= 3; ++n) {
            const KinkRow& lin = rep.linear.rows[8 * n];
            const KinkRow& z = rep.duhamel.rows[8 * n];
            if (std::abs(z.jump_spectral) > 0.05 * std::abs(lin.jump_spectral))
                z_jumps_ok = false;
            if (z.tail_exponent > -2.4) z_tails_ok = false;
            if (n == 3)
                det = fmt("t=3: |z| %.3g vs 5%% cap %.3g", std::abs(z.jump_spectral),
                          0.05 * std::abs(lin.jump_spectral));
        }
        report("6d nonlinear z jump <= 5% of linear jump at integers", z_jumps_ok, det);
        report("6e nonlinear z tail exponent <= -2.4", z_tails_ok,
               fmt("t=3 tail %.3f", rep.duhamel.rows[24].tail_exponent));
    }
    const double elapsed = seconds_since(t0);
    report("6f blow-up runtime < 5 min", elapsed < 300.0, fmt("%.1f s", elapsed));
}

// --------------------------------------------------------------------------
// 7. regularity gain
// --------------------------------------------------------------------------
void criterion_regularity_gain() {
    RegularityGainSpec spec; // (s, b, a) = (0, 0.45, 0.5)
    RegularityGainResult base = run_regularity_gain(spec);

    RegularityGainSpec refined = spec;
    refined.grid_n *= 2;
    refined.time_levels *= 2;
    RegularityGainResult fine = run_regularity_gain(refined);

    RegularityGainSpec doubled = spec;
    doubled.datum_l2 *= 2.0;
    RegularityGainResult two = run_regularity_gain(doubled);

    const bool finite = std::isfinite(base.ratio) && base.ratio > 0.0;
    const double refine_change = std::abs(fine.ratio - base.ratio) / base.ratio;
    const double amp_gain = two.z_sup_norm / base.z_sup_norm;
    report("7a gain ratio finite and stable +- 30% under refinement",
           finite && refine_change <= 0.3,
           fmt("ratio %.4g, refined change %.3g%%", base.ratio, 100.0 * refine_change));
    report("7b ~4x output under 2x amplitude", amp_gain > 3.2 && amp_gain < 4.8,
           fmt("gain %.3f", amp_gain));
}

// brute-force kernel oracle (fine Simpson with log-spaced far field)
double kernel_brute_oracle(double xi, double tau, double a, double b) {
    auto inner = [&](double xi1) {
        const double c1 = -std::pow(xi1, 5.0);
        const double d = xi - xi1;
        const double c2 = tau + d * d * d * d * d;
        auto f = [&](double t) {
            return std::pow(1.0 + std::abs(t - c1), -2.0 * b) *
                   std::pow(1.0 + std::abs(t - c2), -2.0 * b);
        };
        const double lo = std::min(c1, c2), hi = std::max(c1, c2);
        const double W = 3e3 * std::max(1.0, std::max(std::abs(c1), std::abs(c2)));
        auto log_piece = [&](double from, double span, double sign) {
            return oracle::simpson(
                [&](double u) { return f(from + sign * std::exp(u)) * std::exp(u); },
                std::log(100.0), std::log(span), 1500);
        };
        double acc = 0.0;
        if (hi > lo) {
            if (hi - lo <= 200.0) {
                acc += oracle::simpson(f, lo, hi, 2000);
            } else {
                const double mid = 0.5 * (lo + hi);
                acc += oracle::simpson(f, lo, lo + 100.0, 2000);
                acc += log_piece(lo, mid - lo, 1.0);
                acc += log_piece(hi, hi - mid, -1.0);
                acc += oracle::simpson(f, hi - 100.0, hi, 2000);
            }
        }
        acc += oracle::simpson(f, lo - 100.0, lo, 2000);
        acc += oracle::simpson(f, hi, hi + 100.0, 2000);
        acc += log_piece(lo, W, -1.0);
        acc += log_piece(hi, W, 1.0);
        const double s = 4.0 * b;
        acc += 2.0 * std::pow(W, 1.0 - s) / (s - 1.0);
        return acc;
    };
    const double outer = oracle::simpson(inner, -12.0, 12.0, 800);
    const double p5 = std::pow(xi, 5.0);
    return std::pow(1.0 + std::abs(xi), 2.0 * a) * xi * xi /
           std::pow(1.0 + std::abs(tau + p5), 2.0 * b) * outer;
}

} // namespace

int main() {
    std::printf("acceptance suite, fifth-order KdV laboratory\n");
    const auto t0 = std::chrono::steady_clock::now();
    criterion_spectral_core();
    criterion_propagator();
    criterion_solver();
    criterion_bourgain();
    criterion_kernel();
    criterion_blowup();
    criterion_regularity_gain();
    std::printf("total: %s in %.1f s\n", g_failures ? "FAIL" : "PASS",
                seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
