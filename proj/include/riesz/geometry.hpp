#pragma once

#include <optional>
#include <vector>

#include "riesz/vec.hpp"

namespace riesz {

/// Convex core (finite vertex set) plus a parallel-body radius delta.
/// The represented body is conv(core_vertices) + delta * B^n.
struct BodySpec {
    int dimension = 0;
    std::vector<Vec> core_vertices;
    double delta = 0.0;
    std::optional<Vec> base_point;  // optional interior override
};

struct ConvexBody {
    BodySpec spec;
    double diameter_core = 0.0;  // d = diam of the core vertex set
    Vec base_point;              // interior point, default centroid of core vertices

    int dim() const { return spec.dimension; }
    double delta() const { return spec.delta; }
    /// Characteristic length used for relative tolerances.
    double scale() const { return spec.delta + diameter_core; }
};

/// Validates the spec and computes diameter and base point.
/// Throws std::invalid_argument on degenerate input (empty vertices,
/// dimension out of [2,10], delta=0 with a hull that is not full-dimensional).
ConvexBody build_body(const BodySpec& spec);

/// Nearest point of conv(core vertices) to p (min-norm-point / Wolfe algorithm).
Vec project_to_core(const ConvexBody& body, const Vec& p);

/// Euclidean distance from p to conv(core vertices).
double dist_to_core(const ConvexBody& body, const Vec& p);

/// Support value M_v(Omega) = max over core vertices of (vertex . v) + delta.
/// v must be a unit vector (tolerance 1e-12).
double support(const ConvexBody& body, const Vec& v);

/// True iff dist(p, conv(core)) <= delta + tol.
bool contains(const ConvexBody& body, const Vec& p, double tol = 1e-9);

/// Radial function: sup{ a >= 0 | x + a v in Omega }, found by root finding on
/// the convex function a |-> dist(x + a v, conv(core)) - delta.
/// x must be strictly interior. abs_tol <= 0 selects the default
/// 1e-10 * (delta + d).
double radial(const ConvexBody& body, const Vec& x, const Vec& v, double abs_tol = -1.0);

/// Reflection of p in the hyperplane {x . v = b}.
Vec reflect(const Vec& p, const Vec& v, double b);

/// Radial function of the planar section Omega ^ span(e, gamma) about x,
/// in direction cos(phi) e + sin(phi) gamma. Requires gamma orthogonal to e
/// and x interior.
double section_radial(const ConvexBody& body, const Vec& x, const Vec& axis,
                      const Vec& normal_dir, double phi, double abs_tol = -1.0);

/// Outward unit normal of the parallel-body boundary at the boundary point
/// hit by the ray x + rho v (rho = radial(body, x, v)). Computed from the
/// core-hull projection of a point nudged just outside the boundary.
Vec boundary_normal(const ConvexBody& body, const Vec& x, const Vec& v, double rho);

/// Orthonormal basis of the orthogonal complement of axis (n-1 vectors).
std::vector<Vec> orthogonal_complement(const Vec& axis);

/// Min-norm point of conv(points) (no body involved); returns the nearest
/// point of the hull to the origin-translated query q.
Vec nearest_point_in_hull(const std::vector<Vec>& points, const Vec& q);

}  // namespace riesz
