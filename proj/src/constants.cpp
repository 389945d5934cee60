#include "riesz/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riesz/quadrature.hpp"

namespace riesz {

namespace {

void check_psi_domain(int n, double alpha, double c) {
    if (n < 3) throw std::invalid_argument("psi: requires n >= 3");
    if (!(alpha > 1.0 && alpha < n + 1.0)) throw std::invalid_argument("psi: requires 1 < alpha < n+1");
    if (!(c > 0.0)) throw std::invalid_argument("psi: requires c > 0");
}

double psi_base(int n, double alpha, double c) {
    return std::pow(1.0 + std::pow(4.0 * c * c + 1.0, -0.5 * (n + 2.0 - alpha)),
                    1.0 / (n - 2.0));
}

// Golden-section refinement of a maximum of f on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, int iters = 120) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-14 * (std::abs(a) + 1.0); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return std::max({f(a), f(b), f1, f2});
}

// Max of f over a dense grid on [lo, hi] (endpoints included) with
// golden-section polish around the best grid point.
template <typename F>
double grid_sup(F f, double lo, double hi, int points) {
    double best = -1e308;
    int best_i = 0;
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * i / (points - 1.0);
        double v = f(x);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double a = lo + (hi - lo) * std::max(best_i - 1, 0) / (points - 1.0);
    double b = lo + (hi - lo) * std::min(best_i + 1, points - 1) / (points - 1.0);
    return std::max(best, golden_max(f, a, b));
}

}  // namespace

double psi_first_form(int n, double alpha, double c) {
    check_psi_domain(n, alpha, c);
    double A = psi_base(n, alpha, c);
    return (2.0 * A + 1.0) / (A - 1.0);
}

double psi(int n, double alpha, double c) {
    check_psi_domain(n, alpha, c);
    double A = psi_base(n, alpha, c);
    double v = 2.0 + 3.0 / (A - 1.0);
    double v1 = (2.0 * A + 1.0) / (A - 1.0);
    if (std::abs(v - v1) > 1e-12 * std::abs(v))
        throw std::runtime_error("psi: closed forms disagree beyond 1e-12");
    return v;
}

double a0(int n, double alpha, double xi0) {
    if (!(xi0 > 0.0)) throw std::invalid_argument("a0: requires xi0 > 0");
    double c0 = (2.0 * xi0 * xi0 + 1.0) / xi0;
    return psi(n, alpha, c0) * c0;
}

double f_const(int n, double alpha) {
    if (!(alpha > 1.0 && alpha < n + 1.0))
        throw std::invalid_argument("f_const: requires 1 < alpha < n+1");
    if (n == 2) return 0.5 * std::sqrt(4.0 - alpha);
    double xi0 = 2.0 * std::sqrt((n + 2.0 - alpha) / (n + 1.0 - alpha));
    double c0 = (2.0 * xi0 * xi0 + 1.0) / xi0;
    return 0.5 * std::sqrt(n + 1.0 - alpha) * psi(n, alpha, c0) * c0 - 1.0;
}

double g_integral(int n, double alpha, double beta, double quad_tol) {
    if (n < 3) throw std::invalid_argument("g_integral: requires n >= 3");
    if (!(alpha > n && alpha < n + 1.0))
        throw std::invalid_argument("g_integral: requires n < alpha < n+1");
    if (!(beta > 0.0)) throw std::invalid_argument("g_integral: requires beta > 0");

    const double lam = n + 1.0 - alpha;
    const double theta_c = std::atan(std::sqrt(lam));  // cone half-angle about the y1 axis
    auto ang = [&](double theta) {
        double cth = std::cos(theta), sth = std::sin(theta);
        return (-lam * cth * cth + sth * sth) * std::pow(sth, n - 2);
    };
    QuadResult full = adaptive_quad(ang, 0.0, std::numbers::pi, quad_tol);
    QuadResult cap = adaptive_quad(ang, 0.0, theta_c, quad_tol);
    double ang_cone = 2.0 * cap.value;  // the cone has symmetric caps at both poles

    // integrand is (alpha - n - 4 + 2)-homogeneous; with r^{n-1} the radial
    // exponent is alpha - 3 (finite since alpha > n >= 3 > 2)
    double radial_unit = 1.0 / (alpha - 2.0);
    double radial_shell = (std::pow(1.0 + 1.0 / beta, alpha - 2.0) - 1.0) / (alpha - 2.0);

    return sphere_area(n - 2) * (radial_unit * full.value + radial_shell * ang_cone);
}

double alpha0(int n, double b) {
    if (n < 3) throw std::invalid_argument("alpha0: requires n >= 3");
    if (!(b > 0.0)) throw std::invalid_argument("alpha0: requires b > 0");
    const int grid = 1024;
    const double lo = n + 1e-9, hi = n + 1.0 - 1e-9;
    auto at = [&](int i) { return lo + (hi - lo) * i / (grid - 1.0); };

    // smallest grid index from which g stays positive up to n+1
    int first_good = grid - 1;
    for (int i = grid - 1; i >= 0; --i) {
        if (g_integral(n, at(i), b) > 0.0)
            first_good = i;
        else
            break;
    }
    if (first_good == 0) return at(0);
    double a_lo = at(first_good - 1), a_hi = at(first_good);
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (a_lo + a_hi);
        if (g_integral(n, mid, b) > 0.0)
            a_hi = mid;
        else
            a_lo = mid;
    }
    return a_hi;
}

PhiResult phi(int n) {
    if (n < 2) throw std::invalid_argument("phi: requires n >= 2");
    PhiResult out;
    if (n == 2) {
        out.value = std::sqrt(3.0);
        out.alpha_cap = 3.0;
        out.computed_sup = grid_sup([&](double a) { return f_const(2, a); },
                                    1.0 + 1e-12, 3.0 - 1e-12, 1024);
        return out;
    }
    out.alpha_cap = alpha0(n, 10.0);
    out.computed_sup = grid_sup([&](double a) { return f_const(n, a); },
                                1.0 + 1e-9, out.alpha_cap, 1024);
    out.value = std::max(10.0, out.computed_sup);
    return out;
}

}  // namespace riesz
