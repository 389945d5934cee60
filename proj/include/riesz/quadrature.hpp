#pragma once

#include <functional>
#include <vector>

#include "riesz/vec.hpp"

namespace riesz {

/// Quadrature nodes and weights on the unit sphere S^k (embedded in R^{k+1}).
/// Weights sum to the surface measure sigma(S^k).
struct SphereGrid {
    int dim_sphere = 0;
    std::vector<Vec> nodes;
    std::vector<double> weights;
};

/// Surface measure of S^k: sigma(S^0)=2, sigma(S^1)=2*pi, sigma(S^2)=4*pi, ...
double sphere_area(int k);

/// Builds a grid on S^k.
///  k=0: the two points +-1, weight 1 each.
///  k=1: `resolution` uniform angles, weight 2*pi/resolution.
///  k>=2: Gauss-Legendre in the polar angle (resolution nodes) tensored with
///        a grid on S^{k-1}; total weight rescaled to the exact area.
SphereGrid sphere_grid(int k, int resolution);

/// Grid cache shared across evaluations (grids are immutable once built).
const SphereGrid& cached_sphere_grid(int k, int resolution);

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod 7/15 quadrature with deterministic bisection order.
/// Stops when the summed error estimate is below tol * max(1, |value|); flags
/// non-convergence past subdivision depth 60.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace riesz
