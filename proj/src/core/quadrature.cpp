#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace kdv5 {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1]
constexpr int gk_n = 8;
constexpr double gk_node[gk_n] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
constexpr double k15_w[gk_n] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights attach to nodes 0, 2, 4, 6
constexpr double g7_w[4] = {0.417959183673469, 0.381830050505119, 0.279705391489277,
                            0.129484966168870};

struct Panel {
    double a, b;
    int depth;
};

void gk15(const std::function<double(double)>& f, double a, double b, double& k15,
          double& err, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double k = k15_w[0] * f0;
    double g = g7_w[0] * f0;
    ++evals;
    for (int i = 1; i < gk_n; ++i) {
        const double dx = h * gk_node[i];
        const double fi = f(c + dx) + f(c - dx);
        evals += 2;
        k += k15_w[i] * fi;
        if ((i & 1) == 0) g += g7_w[i / 2] * fi;
    }
    k15 = k * h;
    const double g7 = g * h;
    double e = 200.0 * std::abs(k15 - g7);
    err = e * std::sqrt(e);
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, double abs_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    std::vector<Panel> stack{{a, b, 0}};
    // first coarse estimate sets the relative-tolerance scale
    double scale_val, scale_err;
    gk15(f, a, b, scale_val, scale_err, out.evals);
    double scale = std::abs(scale_val);
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double v, e;
        gk15(f, p.a, p.b, v, e, out.evals);
        const double tol = std::max(abs_tol, rel_tol * std::max(scale, std::abs(v)));
        if (e <= tol || p.depth >= max_depth) {
            out.value += v;
            out.error += e;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid, p.depth + 1});
        stack.push_back({mid, p.b, p.depth + 1});
        scale = std::max(scale, std::abs(out.value));
    }
    return out;
}

namespace {

// integral_R^inf (x + d1)^{-p} (x + d2)^{-q} dx by a three-term 1/x expansion;
// requires R >> |d1|, |d2| and p + q > 1.
double series_tail(double R, double p, double d1, double q, double d2) {
    const double s = p + q;
    const double A = -(p * d1 + q * d2);
    const double B = 0.5 * p * (p + 1.0) * d1 * d1 + p * q * d1 * d2 +
                     0.5 * q * (q + 1.0) * d2 * d2;
    return std::pow(R, 1.0 - s) / (s - 1.0) + A * std::pow(R, -s) / s +
           B * std::pow(R, -1.0 - s) / (s + 1.0);
}

// adaptive integration of f over [a, b] split into geometrically growing
// panels starting at width w0 from the 'a' end
double geometric_panels(const std::function<double(double)>& f, double a, double b,
                        double w0, double rel_tol) {
    double acc = 0.0;
    double lo = a;
    double w = w0;
    while (lo < b) {
        const double hi = std::min(b, lo + w);
        acc += integrate_adaptive(f, lo, hi, rel_tol).value;
        lo = hi;
        w *= 8.0;
    }
    return acc;
}

} // namespace

double bracket_pair_integral(double p, double q, double c1, double c2, double rel_tol,
                             double window_factor) {
    if (p + q <= 1.0)
        throw ParameterViolation("bracket_pair_integral: p + q must exceed 1 for convergence");
    // Work in peak-anchored coordinates u = x - center throughout: in absolute
    // coordinates the difference x - c collapses to rounding noise once |c|
    // outgrows the peak width (kernel evaluations reach |c| ~ 1e49), which
    // flattens the peak over ulp(c)-sized panels and fabricates mass.
    const double lo_c = std::min(c1, c2);
    const double hi_c = std::max(c1, c2);
    const double D = hi_c - lo_c;
    const double p_lo = (c1 <= c2) ? p : q; // exponent of the lower peak
    const double p_hi = (c1 <= c2) ? q : p;
    auto f_lo = [&](double u) {
        return std::pow(1.0 + std::abs(u), -p_lo) * std::pow(1.0 + std::abs(u - D), -p_hi);
    };
    auto f_hi = [&](double v) {
        return std::pow(1.0 + std::abs(v + D), -p_lo) * std::pow(1.0 + std::abs(v), -p_hi);
    };
    const double W = window_factor * (1.0 + D);

    double acc = 0.0;
    if (D > 0.0) {
        // between the peaks: walk away from each in geometric panels
        if (D <= 8.0) {
            acc += integrate_adaptive(f_lo, 0.0, D, rel_tol).value;
        } else {
            acc += geometric_panels(f_lo, 0.0, 0.5 * D, 1.0, rel_tol);
            acc += geometric_panels([&](double t) { return f_hi(-t); }, 0.0, 0.5 * D, 1.0,
                                    rel_tol);
        }
    }
    // outward sides
    acc += geometric_panels([&](double t) { return f_lo(-t); }, 0.0, W, 1.0, rel_tol);
    acc += geometric_panels(f_hi, 0.0, W, 1.0, rel_tol);
    // series tails beyond the windows (y measured outward from each peak)
    acc += series_tail(W, p_lo, 1.0, p_hi, 1.0 + D);
    acc += series_tail(W, p_hi, 1.0, p_lo, 1.0 + D);
    return acc;
}

double bracket_sqrt_integral(double rho, double a, double rel_tol, double window_factor) {
    if (rho + 0.5 <= 1.0)
        throw ParameterViolation("bracket_sqrt_integral: rho must exceed 1/2");
    auto f = [&](double x) {
        return std::pow(1.0 + std::abs(x), -rho) / std::sqrt(std::abs(x - a));
    };
    const double R = window_factor * (1.0 + std::abs(a));

    double acc = 0.0;
    // singular zone [a - 1, a + 1] via u = sqrt(|x - a|)
    acc += 2.0 * integrate_adaptive(
                     [&](double u) { return std::pow(1.0 + std::abs(a + u * u), -rho); },
                     0.0, 1.0, rel_tol)
                     .value;
    acc += 2.0 * integrate_adaptive(
                     [&](double u) { return std::pow(1.0 + std::abs(a - u * u), -rho); },
                     0.0, 1.0, rel_tol)
                     .value;
    // regular middle, split at the bracket kink x = 0 when it lies outside
    auto middle = [&](double lo, double hi) {
        if (hi <= lo) return;
        if (lo < 0.0 && hi > 0.0) {
            acc += geometric_panels([&](double t) { return f(-t); }, 0.0, -lo, 1.0, rel_tol);
            acc += geometric_panels(f, 0.0, hi, 1.0, rel_tol);
        } else if (hi <= 0.0) {
            acc += geometric_panels([&](double t) { return f(hi - t); }, 0.0, hi - lo, 1.0,
                                    rel_tol);
        } else {
            acc += geometric_panels(f, lo, hi, 1.0, rel_tol);
        }
    };
    middle(a + 1.0, a + R);
    middle(a - R, a - 1.0);
    // tails; on the right <x> = 1 + x and x - a > 0
    acc += series_tail(a + R, rho, 1.0, 0.5, -a);
    acc += series_tail(R - a, rho, 1.0, 0.5, a);
    return acc;
}

} // namespace kdv5
