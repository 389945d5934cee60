#pragma once

#include "riesz/geometry.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

/// Exponent and resolution settings for potential evaluation.
/// log_mode selects the log potential (the alpha = n case); alpha is
/// ignored then.
struct PotentialParams {
    double alpha = 2.0;
    bool log_mode = false;
    int sphere_res = 0;   // radial-formula grid on S^{n-1}; 0 = default
    int section_res = 0;  // derivative section grid on S^{n-2}; 0 = default
    double quad_tol = 1e-8;

    void validate(int n) const;
};

struct ValueErr {
    double value = 0.0;
    double error = 0.0;
};

/// V(x) via the radial formula: (1/alpha) * sum w * rho^alpha over S^{n-1},
/// or the radial log reduction sum w * (rho^n/n^2 - rho^n ln(rho)/n).
double potential(const ConvexBody& body, const Vec& x, const PotentialParams& params);

/// Gradient by the boundary integral, evaluated through the planar section
/// decomposition around the axis e_j through x (one pass per component).
Vec gradient(const ConvexBody& body, const Vec& x, const PotentialParams& params);
ValueErr gradient_component(const ConvexBody& body, const Vec& x, int j,
                            const PotentialParams& params);

/// Diagonal second derivative d^2 V / dx_j^2 by the section decomposition.
ValueErr hessian_diag(const ConvexBody& body, const Vec& x, int j,
                      const PotentialParams& params);

/// Value and gradient in one radial-formula sphere pass (gradient from the
/// boundary-normal formula d rho / dx = -nu / (v . nu)). Used by the center
/// search; agrees with gradient() and is much cheaper for n >= 3.
struct PotGrad {
    double value = 0.0;
    Vec grad;
};
PotGrad value_and_gradient_radial(const ConvexBody& body, const Vec& x,
                                  const PotentialParams& params);

int default_sphere_res(int n);
int default_section_res(int n);

/// Line integral along the section curve Gamma = dOmega ^ span(axis, gamma)
/// about x (phi in (0, pi)):
///   int_Gamma r^{alpha - m - 2} (x_axis - y_axis) y_perp^{m-2} dy_perp,
/// with the kernel dimension m decoupled from the body dimension. This is the
/// building block of the diagonal second derivative and of the section-sign
/// checks.
ValueErr section_line_integral(const ConvexBody& body, const Vec& x, const Vec& axis,
                               const Vec& gamma, double alpha, int m_kernel,
                               double quad_tol = 1e-8);

}  // namespace riesz
