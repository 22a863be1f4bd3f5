#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/kernel.hpp"
#include "oracles.hpp"

using namespace kdv5;

namespace {

// brute-force oracle for the kernel integrand at (xi, tau): fine Simpson in
// xi_1 of a fine Simpson in tau_1 (split at both bracket centers) plus the
// leading <tau_1>^{-4b} tail term
double kernel_oracle(double xi, double tau, double a, double b) {
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
        // fine panels near the two peaks, log-spaced panels in the far field
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
    // xi_1 window [-12, 12]; the neglected tail decays like |xi_1|^{4 - 16 b}
    // and contributes below the 1% comparison tolerance
    const double outer = oracle::simpson(inner, -12.0, 12.0, 800);
    const double p5 = std::pow(xi, 5.0);
    const double pref = std::pow(1.0 + std::abs(xi), 2.0 * a) * xi * xi /
                        std::pow(1.0 + std::abs(tau + p5), 2.0 * b);
    return pref * outer;
}

} // namespace

TEST_CASE("mu forms") {
    SUBCASE("worked examples") {
        auto [d1, c1] = mu_forms(2.0, 1.0, 0.0);
        CHECK(d1 == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(c1 == doctest::Approx(2.0).epsilon(1e-14));
        auto [d2, c2] = mu_forms(1.0, 0.0, 0.0);
        CHECK(d2 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(c2 == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("agreement over a million random triples") {
        std::mt19937_64 rng(123);
        std::uniform_real_distribution<double> uxi(-10.0, 10.0), utau(-1000.0, 1000.0);
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i) {
            const double xi = uxi(rng), xi1 = uxi(rng), tau = utau(rng);
            auto [d, c] = mu_forms(xi, xi1, tau);
            worst = std::max(worst, std::abs(d - c) / (1.0 + std::abs(d)));
        }
        CHECK(worst <= 1e-9);
    }
    SUBCASE("minimum over xi_1 sits at xi/2 with value tau + xi^5/16") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uxi(0.1, 4.0), utau(-100.0, 100.0);
        for (int trial = 0; trial < 20; ++trial) {
            const double xi = uxi(rng), tau = utau(rng);
            const double at_half = mu_forms(xi, 0.5 * xi, tau).first;
            CHECK(at_half ==
                  doctest::Approx(tau + std::pow(xi, 5.0) / 16.0).epsilon(1e-10));
            for (double frac : {-0.7, -0.2, 0.1, 0.35, 0.8, 1.3})
                CHECK(mu_forms(xi, frac * xi, tau).first >= at_half - 1e-10);
        }
    }
}

TEST_CASE("reduced bound") {
    KernelParams p;
    p.a = 0.5;
    p.b = 0.45;
    SUBCASE("vanishes at xi = 0") { CHECK(reduced_bound(0.0, 3.0, p) == 0.0); }
    SUBCASE("worked value at (1, 0)") {
        CHECK(reduced_bound(1.0, 0.0, p) == doctest::Approx(1.052455).epsilon(1e-4));
    }
    SUBCASE("flat along tau = -xi^5 at the exponent boundary a = 10b - 4") {
        KernelParams q = p;
        q.a = 10.0 * q.b - 4.0;
        std::vector<double> xs, ys;
        for (double xi : {16.0, 32.0, 64.0, 128.0, 256.0}) {
            xs.push_back(std::log(xi));
            ys.push_back(std::log(reduced_bound(xi, -std::pow(xi, 5.0), q)));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double n = xs.size();
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(std::abs(slope) < 0.1);
    }
    SUBCASE("b outside (3/8, 1/2) is rejected") {
        KernelParams q = p;
        q.b = 0.3;
        CHECK_THROWS_AS(reduced_bound(1.0, 0.0, q), ParameterViolation);
    }
}

TEST_CASE("kernel integral") {
    KernelParams p;
    p.a = 0.5;
    p.b = 0.45;

    SUBCASE("zero at xi = 0") {
        CHECK(kernel_integral(0.0, 5.0, p).value == 0.0);
        CHECK(kernel_integral(0.0, -100.0, p).value == 0.0);
    }

    SUBCASE("golden value at (1, 0) against the brute-force oracle") {
        const double ref = kernel_oracle(1.0, 0.0, p.a, p.b);
        const KernelValue got = kernel_integral(1.0, 0.0, p);
        CHECK(std::abs(got.value - ref) < 0.01 * ref);
        CHECK(got.quad_error < 0.01);
        // frozen golden (oracle-verified first run; the oracle's truncated
        // xi_1 window sits ~0.5% below)
        CHECK(got.value == doctest::Approx(7.5736).epsilon(0.02));
    }

    SUBCASE("symmetric under (xi, tau) -> (-xi, -tau)") {
        KernelParams q = p;
        q.refine_check = false;
        for (auto [xi, tau] : {std::pair{1.5, 10.0}, {0.75, -3.0}}) {
            const double v1 = kernel_integral(xi, tau, q).value;
            const double v2 = kernel_integral(-xi, -tau, q).value;
            CHECK(std::abs(v1 - v2) < 0.02 * std::max(v1, v2));
        }
    }

    SUBCASE("decreasing in b") {
        KernelParams q = p;
        q.refine_check = false;
        q.b = 0.42;
        const double lo_b = kernel_integral(1.0, 5.0, q).value;
        q.b = 0.47;
        const double hi_b = kernel_integral(1.0, 5.0, q).value;
        CHECK(hi_b < lo_b);
    }

    SUBCASE("inner reduction stays within a bounded constant of <mu>^{1-4b}") {
        // the beta = gamma = 2b case of the calculus bound carries a constant
        // of order 2/(1-2b) ~ 20; the ratios must be bounded and consistent
        const double r1 = inner_reduction_ratio(1.0, 0.0, p);
        const double r2 = inner_reduction_ratio(2.0, -10.0, p);
        CHECK(r1 < 100.0);
        CHECK(r2 < 100.0);
        CHECK(std::abs(r1 - r2) < r1);
    }

    SUBCASE("invalid b is rejected") {
        KernelParams q = p;
        q.b = 0.2;
        CHECK_THROWS_AS(kernel_integral(1.0, 0.0, q), ParameterViolation);
    }
}

TEST_CASE("calculus inequalities") {
    SUBCASE("ci1 with beta = 2, gamma = 0.9 (phi = 1 branch)") {
        for (double sep : {1.0, 10.0, 100.0}) {
            CalcIneqResult r = calc_ineq_ci1(2.0, 0.9, sep, 0.0);
            CHECK(r.lhs > 0.0);
            CHECK(r.ratio > 0.0);
            CHECK(r.ratio < 20.0);
        }
    }
    SUBCASE("ci1 with beta = gamma = 0.9: ratios bounded and refinement-stable") {
        double c_coarse = 0.0, c_fine = 0.0;
        for (double sep : {1.0, 10.0, 100.0}) {
            c_coarse = std::max(c_coarse, calc_ineq_ci1(0.9, 0.9, sep, 0.0, 1e-6).ratio);
            c_fine = std::max(c_fine, calc_ineq_ci1(0.9, 0.9, sep, 0.0, 1e-9).ratio);
        }
        CHECK(c_coarse < 20.0);
        CHECK(std::abs(c_coarse - c_fine) < 0.02 * c_fine);
    }
    SUBCASE("ci2 at a = 0: unit shape, finite lhs") {
        CalcIneqResult r = calc_ineq_ci2(0.75, 0.0);
        CHECK(r.rhs_shape == 1.0);
        CHECK(r.lhs > 0.0);
        CHECK(std::isfinite(r.lhs));
    }
    SUBCASE("ci2 decay exponent is rho - 1/2") {
        // finite-a corrections scale like a^{rho-1}, so moderate rho keeps the
        // fit inside the +-0.05 window over a in [10, 1000]
        const double rho = 0.7;
        std::vector<double> xs, ys;
        for (double a : {10.0, 31.6, 100.0, 316.0, 1000.0}) {
            xs.push_back(std::log(a));
            ys.push_back(std::log(calc_ineq_ci2(rho, a).lhs));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double n = xs.size();
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(std::abs(slope + (rho - 0.5)) < 0.05);
    }
    SUBCASE("parameter violations") {
        CHECK_THROWS_AS(calc_ineq_ci1(0.4, 0.4, 0.0, 1.0), ParameterViolation);
        CHECK_THROWS_AS(calc_ineq_ci1(0.5, 0.9, 0.0, 1.0), ParameterViolation);
        CHECK_THROWS_AS(calc_ineq_ci2(0.4, 0.0), ParameterViolation);
        CHECK_THROWS_AS(calc_ineq_ci2(1.1, 0.0), ParameterViolation);
    }
}

TEST_CASE("sup scan on a reduced lattice") {
    KernelParams p;
    p.a = 0.5;
    p.b = 0.45;
    p.rel_tol = 1e-3;
    p.refine_check = false;
    ScanSpec spec;
    spec.params = p;
    spec.xi_lattice = {0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
    spec.tau_lattice = {0.0, 10.0, -10.0};
    spec.curve_xi = {1.0, 2.0, 4.0};
    ScanReport rep = sup_scan(spec);
    CHECK(rep.lattice.size() == 18);
    CHECK(rep.curve_resonant.size() == 3);
    CHECK(rep.curve_sixteenth.size() == 3);
    CHECK(rep.max_kernel > 0.0);
    CHECK(rep.c_star > 0.0);
    CHECK(std::isfinite(rep.c_star));
    for (const ScanPoint& pt : rep.lattice)
        CHECK(pt.kernel <= rep.c_star * pt.reduced * (1.0 + 1e-9));
}
