#pragma once

#include "riesz/geometry.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Half-space data of the minimal unfolded region: Uf = /\_v { x.v <= u_v }.
struct UnfoldedRegion {
    std::vector<Vec> directions;
    std::vector<double> offsets;
    std::vector<Vec> hull_points;  // boundary points, outer approximation

    double diameter() const;
    bool contains(const Vec& p, double tol) const;
};

struct FoldConfig {
    int boundary_samples = 0;  // 0 -> default: 2048 (n=2), 8192 (n=3), 4096 (n>=4)
    int bisect_iters = 40;
    double contain_tol = 0.0;  // 0 -> 1e-9 * body scale
};

/// Boundary sample set for the reflection tests (ray casts from the base point).
std::vector<Vec> boundary_samples(const ConvexBody& body, int count);

/// Smallest offset u_v such that every cap { x.v >= b } with b >= u_v reflects
/// into the body. Computed per boundary sample: along the reflection line the
/// hull distance is convex, so each sample admits an interval of passing
/// offsets ending at its own height; u_v is the largest interval start,
/// located by bisection.
double fold_offset(const ConvexBody& body, const Vec& v, const FoldConfig& cfg = {});

/// fold_offset against a precomputed sample set (shared across directions).
double fold_offset_sampled(const ConvexBody& body, const Vec& v,
                           const std::vector<Vec>& samples, const FoldConfig& cfg);

/// Evaluates fold_offset over a direction grid on S^{n-1} (resolution dir_res)
/// and assembles the half-space data plus boundary points of the region.
UnfoldedRegion unfolded_region(const ConvexBody& body, int dir_res, const FoldConfig& cfg = {});

/// Checks u_v(core + delta B) <= M_v(core) + tol over the direction grid.
/// worst_margin is the largest u_v - M_v(core) observed.
LemmaReport check_uf_in_hull(const BodySpec& core_spec, double delta, int dir_res,
                             double tol = -1.0, const FoldConfig& cfg = {});

}  // namespace riesz
