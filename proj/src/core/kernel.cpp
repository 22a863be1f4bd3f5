#include "kernel.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"

namespace kdv5 {

namespace {

double xi_fifth(double xi) {
    const double xi2 = xi * xi;
    return xi2 * xi2 * xi;
}

void check_kernel_params(const KernelParams& p) {
    if (!(p.b > 0.25) || !(p.b <= 0.5))
        throw ParameterViolation("kernel_integral: need 1/4 < b <= 1/2 for the tau_1 "
                                 "integral to converge, got b = " + std::to_string(p.b));
    if (p.a < 0.0)
        throw ParameterViolation("kernel_integral: need a >= 0");
}

// inner tau_1 integral at fixed xi_1
double inner_tau(double xi, double tau, double xi1, const KernelParams& p, double rel_tol) {
    const double c1 = -xi_fifth(xi1);
    const double c2 = tau + xi_fifth(xi - xi1);
    return bracket_pair_integral(2.0 * p.b, 2.0 * p.b, c1, c2, rel_tol, p.window_factor);
}

// xi_1 breakpoints: stationary point of mu at xi/2 plus the real roots of
// mu = 0, where the inner integral changes character
std::vector<double> xi1_breakpoints(double xi, double tau, double cut) {
    std::vector<double> pts{-cut, 0.0, cut};
    if (xi != 0.0) {
        pts.push_back(0.5 * xi);
        pts.push_back(xi);
        // mu = tau + xi^5/16 + (5/2) xi^3 y^2 + 5 xi y^4 with y = xi_1 - xi/2;
        // roots of the quadratic in u = y^2
        const double A = 5.0 * xi;
        const double B = 2.5 * xi * xi * xi;
        const double C = tau + xi_fifth(xi) / 16.0;
        const double disc = B * B - 4.0 * A * C;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            for (double u : {(-B + sq) / (2.0 * A), (-B - sq) / (2.0 * A)}) {
                if (u > 0.0) {
                    pts.push_back(0.5 * xi + std::sqrt(u));
                    pts.push_back(0.5 * xi - std::sqrt(u));
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double v : pts) {
        if (v < -cut || v > cut) continue;
        if (!out.empty() && std::abs(v - out.back()) < 1e-12 * std::max(1.0, cut)) continue;
        out.push_back(v);
    }
    return out;
}

double outer_xi1(double xi, double tau, const KernelParams& p, double rel_tol,
                 double window_scale, double cut_scale) {
    KernelParams q = p;
    q.window_factor = p.window_factor * window_scale;
    const double cut = std::max(p.xi_cut_floor, p.xi_cut_scale * std::abs(xi)) * cut_scale;
    auto f = [&](double xi1) { return inner_tau(xi, tau, xi1, q, rel_tol); };

    double acc = 0.0;
    const std::vector<double> pts = xi1_breakpoints(xi, tau, cut);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        acc += integrate_adaptive(f, pts[i], pts[i + 1], rel_tol).value;
    // algebraic tails via xi_1 = +-cut / t; the integrand decays like
    // |xi_1|^{4 - 16 b} through the third bracket
    for (double sign : {1.0, -1.0}) {
        acc += integrate_adaptive(
                   [&](double t) { return f(sign * cut / t) * cut / (t * t); }, 1e-8, 1.0,
                   rel_tol)
                   .value;
    }
    return acc;
}

double kernel_once(double xi, double tau, const KernelParams& p, double rel_tol,
                   double window_scale, double cut_scale) {
    if (xi == 0.0) return 0.0;
    const double pref = std::pow(bracket(xi), 2.0 * p.a) * xi * xi /
                        std::pow(bracket(tau + xi_fifth(xi)), 2.0 * p.b);
    return pref * outer_xi1(xi, tau, p, rel_tol, window_scale, cut_scale);
}

KernelValue kernel_value(double xi, double tau, const KernelParams& p) {
    check_kernel_params(p);
    KernelValue out;
    if (xi == 0.0) return out;
    const double base = kernel_once(xi, tau, p, p.rel_tol, 1.0, 1.0);
    if (!p.refine_check) {
        out.value = base;
        return out;
    }
    const double fine = kernel_once(xi, tau, p, p.rel_tol / 5.0, 2.0, 1.5);
    out.value = fine;
    out.quad_error = std::abs(base - fine) / std::max(std::abs(fine), 1e-300);
    return out;
}

} // namespace

KernelValue kernel_integral(double xi, double tau, const KernelParams& p) {
    KernelValue v = kernel_value(xi, tau, p);
    if (p.refine_check && v.quad_error > p.refine_tol)
        throw QuadratureNonConvergence(
            "kernel_integral: refinement levels disagree by " +
            std::to_string(100.0 * v.quad_error) + "% at (xi, tau) = (" +
            std::to_string(xi) + ", " + std::to_string(tau) + ")");
    return v;
}

double reduced_bound(double xi, double tau, const KernelParams& p) {
    if (!(p.b > 0.375) || !(p.b < 0.5))
        throw ParameterViolation("reduced_bound: need 3/8 < b < 1/2, got b = " +
                                 std::to_string(p.b));
    if (xi == 0.0) return 0.0;
    const double xi5 = xi_fifth(xi);
    return std::pow(bracket(xi), 2.0 * p.a) * std::sqrt(std::abs(xi)) /
           (std::pow(bracket(tau + xi5), 2.0 * p.b) *
            std::pow(bracket(tau + xi5 / 16.0), 4.0 * p.b - 1.5));
}

std::pair<double, double> mu_forms(double xi, double xi1, double tau) {
    const double direct = xi_fifth(xi1) + tau + xi_fifth(xi - xi1);
    const double y = xi1 - 0.5 * xi;
    const double y2 = y * y;
    const double completed =
        tau + xi_fifth(xi) / 16.0 + 2.5 * xi * xi * xi * y2 + 5.0 * xi * y2 * y2;
    return {direct, completed};
}

double inner_reduction_ratio(double xi, double tau, const KernelParams& p) {
    check_kernel_params(p);
    const double cut = std::max(p.xi_cut_floor, p.xi_cut_scale * std::abs(xi));
    double worst = 0.0;
    const int samples = 41;
    for (int i = 0; i < samples; ++i) {
        const double xi1 = -cut + 2.0 * cut * i / (samples - 1);
        const double direct = inner_tau(xi, tau, xi1, p, p.rel_tol);
        const double mu = mu_forms(xi, xi1, tau).first;
        const double shape = std::pow(bracket(mu), 1.0 - 4.0 * p.b);
        worst = std::max(worst, direct / shape);
    }
    return worst;
}

CalcIneqResult calc_ineq_ci1(double beta, double gamma, double a1, double a2,
                             double rel_tol) {
    if (!(beta >= gamma) || !(gamma >= 0.0) || !(beta + gamma > 1.0))
        throw ParameterViolation("calc_ineq_ci1: need beta >= gamma >= 0 and beta + gamma > 1");
    CalcIneqResult out;
    out.lhs = bracket_pair_integral(beta, gamma, a1, a2, rel_tol);
    const double d = bracket(a1 - a2);
    double phi;
    if (std::abs(beta - 1.0) < 1e-12)
        phi = std::log(1.0 + d);
    else if (beta > 1.0)
        phi = 1.0;
    else
        phi = std::pow(d, 1.0 - beta);
    out.rhs_shape = phi / std::pow(d, gamma);
    out.ratio = out.lhs / out.rhs_shape;
    return out;
}

CalcIneqResult calc_ineq_ci2(double rho, double a, double rel_tol) {
    if (!(rho > 0.5) || !(rho < 1.0))
        throw ParameterViolation("calc_ineq_ci2: need rho in (1/2, 1)");
    CalcIneqResult out;
    out.lhs = bracket_sqrt_integral(rho, a, rel_tol);
    out.rhs_shape = std::pow(bracket(a), 0.5 - rho);
    out.ratio = out.lhs / out.rhs_shape;
    return out;
}

ScanSpec ScanSpec::defaults(const KernelParams& p) {
    ScanSpec s;
    s.params = p;
    for (int i = 1; i <= 16; ++i) {
        s.xi_lattice.push_back(0.25 * i);
        s.xi_lattice.push_back(-0.25 * i);
    }
    s.tau_lattice = {0.0, 1.0, -1.0, 10.0, -10.0, 100.0, -100.0, 1000.0, -1000.0};
    for (int i = 1; i <= 16; ++i) s.curve_xi.push_back(0.25 * i);
    for (double xi : {6.0, 8.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0})
        s.curve_xi.push_back(xi);
    return s;
}

namespace {

ScanPoint scan_point(double xi, double tau, const KernelParams& p) {
    ScanPoint pt;
    pt.xi = xi;
    pt.tau = tau;
    KernelValue v = kernel_value(xi, tau, p);
    pt.kernel = v.value;
    pt.quad_error = v.quad_error;
    pt.reduced = reduced_bound(xi, tau, p);
    pt.ratio = pt.reduced > 0.0 ? pt.kernel / pt.reduced : 0.0;
    return pt;
}

double fit_curve_exponent(const std::vector<ScanPoint>& pts, double min_xi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const ScanPoint& pt : pts) {
        if (std::abs(pt.xi) < min_xi || pt.kernel <= 0.0) continue;
        const double lx = std::log(std::abs(pt.xi));
        const double ly = std::log(pt.kernel);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

ScanReport sup_scan(const ScanSpec& spec) {
    check_kernel_params(spec.params);
    struct Job {
        double xi, tau;
        int family; // 0 lattice, 1 resonant curve, 2 sixteenth curve
    };
    std::vector<Job> jobs;
    for (double xi : spec.xi_lattice)
        for (double tau : spec.tau_lattice) jobs.push_back({xi, tau, 0});
    for (double xi : spec.curve_xi) {
        jobs.push_back({xi, -xi_fifth(xi), 1});
        jobs.push_back({xi, -xi_fifth(xi) / 16.0, 2});
    }

    std::vector<ScanPoint> pts(jobs.size());
    parallel_for(static_cast<int>(jobs.size()), [&](int i) {
        pts[i] = scan_point(jobs[i].xi, jobs[i].tau, spec.params);
    });

    ScanReport rep;
    for (size_t i = 0; i < jobs.size(); ++i) {
        switch (jobs[i].family) {
            case 0: rep.lattice.push_back(pts[i]); break;
            case 1: rep.curve_resonant.push_back(pts[i]); break;
            default: rep.curve_sixteenth.push_back(pts[i]); break;
        }
        rep.max_kernel = std::max(rep.max_kernel, pts[i].kernel);
        rep.c_star = std::max(rep.c_star, pts[i].ratio);
    }
    rep.tail_exponent_resonant = fit_curve_exponent(rep.curve_resonant, spec.fit_min_xi);
    rep.tail_exponent_sixteenth = fit_curve_exponent(rep.curve_sixteenth, spec.fit_min_xi);
    return rep;
}

} // namespace kdv5
