#pragma once

namespace riesz {

/// psi_alpha(c) = 2 + 3 / ((1 + (4c^2+1)^{-(n+2-alpha)/2})^{1/(n-2)} - 1).
/// Evaluates both displayed closed forms and requires 1e-12 relative
/// agreement. Domain: n >= 3, 1 < alpha < n+1, c > 0.
double psi(int n, double alpha, double c);

/// The quotient form (2A+1)/(A-1); exposed for the agreement tests.
double psi_first_form(int n, double alpha, double c);

/// a_0 = psi(c0) * c0 with c0 = (2 xi0^2 + 1) / xi0. Domain: xi0 > 0.
double a0(int n, double alpha, double xi0);

/// Threshold ratio delta/diam for the section-integral sign:
/// n=2: sqrt(4-alpha)/2; n>=3: (sqrt(n+1-alpha)/2) * psi(c0) * c0 - 1 with
/// xi0 = 2 sqrt((n+2-alpha)/(n+1-alpha)). Domain: 1 < alpha < n+1.
double f_const(int n, double alpha);

/// g(alpha, beta): integral of (-(n+1-alpha) y1^2 + sum_{i>1} yi^2)/|y|^{n+4-alpha}
/// over B^n united with (B^n_{1+1/beta} ^ cone around the y1 axis), computed
/// by the polar reduction (closed-form radial part, quadrature angular part).
/// Domain: n >= 3, n < alpha < n+1, beta > 0.
double g_integral(int n, double alpha, double beta, double quad_tol = 1e-10);

/// Smallest alpha in (n, n+1) such that g(a, b) > 0 for all sampled a >= alpha
/// (1024-point grid plus bisection refinement).
double alpha0(int n, double b);

struct PhiResult {
    double value = 0.0;         // the theorem-level constant
    double computed_sup = 0.0;  // numerically computed sup of f_const
    double alpha_cap = 0.0;     // alpha0(10) for n >= 3; 3 for n = 2
};

/// phi(2) = sqrt(3) (with the computed sup of f reported alongside);
/// phi(n>=3) = max(10, sup of f_const over (1, alpha0(10)]).
PhiResult phi(int n);

}  // namespace riesz
