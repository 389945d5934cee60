#pragma once

#include "riesz/potential.hpp"
#include "riesz/unfolded.hpp"

namespace riesz {

struct CenterConfig {
    int starts = 20;
    int max_iters = 300;
    double step_tol = 0.0;     // 0 -> 1e-8 * diam(Omega)
    int uf_dir_res = 0;        // search-domain directions when delta = 0
    uint64_t seed_offset = 0;  // shifts the low-discrepancy seed sequence
};

struct CenterResult {
    Vec point;
    double value = 0.0;
    double grad_norm = 0.0;         // projected-gradient mapping norm at point
    int starts = 0;
    double agreement_radius = 0.0;  // max pairwise distance of converged endpoints
    bool minimizing = false;        // true: alpha > n descent; false: ascent
    bool on_domain_boundary = false;
    bool all_converged = true;
};

/// Locates the extremizer of the potential by projected multistart gradient
/// ascent (alpha < n or log mode) or descent (alpha > n). The search domain is
/// conv(core vertices) when delta > 0, otherwise the hull of the computed
/// minimal unfolded region.
CenterResult find_center(const ConvexBody& body, const PotentialParams& params,
                         const CenterConfig& cfg = {});

/// Center of mass via the radial reduction over a sphere grid.
Vec centroid(const ConvexBody& body, int sphere_res = 0);

/// Volume via (1/n) sum w rho^n (used by centroid; exposed for tests).
double volume(const ConvexBody& body, int sphere_res = 0);

}  // namespace riesz
