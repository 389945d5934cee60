#include "riesz/unfolded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riesz/quadrature.hpp"

namespace riesz {

namespace {

int default_samples(int n) {
    if (n == 2) return 2048;
    if (n == 3) return 8192;
    return 4096;
}

// Direction grid whose node count approximates the requested sample count.
const SphereGrid& sample_grid(int n, int count) {
    if (n == 2) return cached_sphere_grid(1, std::max(count, 4));
    if (n == 3) {
        int res = std::max(4, static_cast<int>(std::lround(std::sqrt(count / 2.0))));
        return cached_sphere_grid(2, res);  // res * 2res nodes
    }
    // node count grows as 2 res^{n-2} roughly; keep it modest
    int res = std::max(4, static_cast<int>(std::lround(std::pow(count / 2.0, 1.0 / (n - 1)))));
    return cached_sphere_grid(n - 1, res);
}

}  // namespace

double UnfoldedRegion::diameter() const {
    double d = 0.0;
    for (size_t i = 0; i < hull_points.size(); ++i)
        for (size_t j = i + 1; j < hull_points.size(); ++j)
            d = std::max(d, dist(hull_points[i], hull_points[j]));
    return d;
}

bool UnfoldedRegion::contains(const Vec& p, double tol) const {
    for (size_t i = 0; i < directions.size(); ++i)
        if (dot(p, directions[i]) > offsets[i] + tol) return false;
    return true;
}

std::vector<Vec> boundary_samples(const ConvexBody& body, int count) {
    if (count <= 0) count = default_samples(body.dim());
    const SphereGrid& grid = sample_grid(body.dim(), count);
    std::vector<Vec> samples;
    samples.reserve(grid.nodes.size());
    const Vec& x0 = body.base_point;
    for (const Vec& v : grid.nodes) {
        double rho = radial(body, x0, v);
        samples.push_back(x0 + rho * v);
    }
    return samples;
}

double fold_offset_sampled(const ConvexBody& body, const Vec& v,
                           const std::vector<Vec>& samples, const FoldConfig& cfg) {
    if (std::abs(norm(v) - 1.0) > 1e-12)
        throw std::invalid_argument("fold_offset: v must be a unit vector");
    const double delta = body.delta();
    const double ctol = cfg.contain_tol > 0.0 ? cfg.contain_tol
                                              : 1e-9 * std::max(body.scale(), 1.0);
    const double m_v = support(body, v);
    double u = -support(body, -1.0 * v);  // lowest conceivable offset

    auto inside = [&](const Vec& p, double s_p, double b) {
        Vec r = p - (2.0 * (s_p - b)) * v;
        return dist_to_core(body, r) <= delta + ctol;
    };

    for (const Vec& p : samples) {
        double s_p = dot(p, v);
        if (s_p <= u) continue;               // cap above u never contains p
        if (inside(p, s_p, u)) continue;      // passes already at the current bound
        // The passing set of b for this sample is an interval ending at s_p
        // (hull distance is convex along the reflection line, and the sample
        // itself reflects to itself at b = s_p). Bisect its left edge.
        double lo = u, hi = s_p;
        for (int it = 0; it < cfg.bisect_iters; ++it) {
            double mid = 0.5 * (lo + hi);
            if (inside(p, s_p, mid))
                hi = mid;
            else
                lo = mid;
        }
        u = hi;
    }
    return std::min(u, m_v);
}

double fold_offset(const ConvexBody& body, const Vec& v, const FoldConfig& cfg) {
    return fold_offset_sampled(body, v, boundary_samples(body, cfg.boundary_samples), cfg);
}

UnfoldedRegion unfolded_region(const ConvexBody& body, int dir_res, const FoldConfig& cfg) {
    if (dir_res < 8) throw std::invalid_argument("unfolded_region: dir_res must be >= 8");
    const int n = body.dim();
    const SphereGrid& dirs = cached_sphere_grid(n - 1, dir_res);
    std::vector<Vec> samples = boundary_samples(body, cfg.boundary_samples);

    UnfoldedRegion region;
    region.directions = dirs.nodes;
    region.offsets.reserve(dirs.nodes.size());
    for (const Vec& v : dirs.nodes)
        region.offsets.push_back(fold_offset_sampled(body, v, samples, cfg));

    // Feasible point by cyclic projection onto the half-spaces.
    Vec x0(n);
    for (const Vec& w : body.spec.core_vertices) x0 += w;
    x0 *= 1.0 / static_cast<double>(body.spec.core_vertices.size());
    const double scale = std::max(body.scale(), 1.0);
    for (int sweep = 0; sweep < 5000; ++sweep) {
        double worst = 0.0;
        for (size_t i = 0; i < region.directions.size(); ++i) {
            double viol = dot(x0, region.directions[i]) - region.offsets[i];
            if (viol > 0.0) {
                x0 -= viol * region.directions[i];
                worst = std::max(worst, viol);
            }
        }
        if (worst <= 1e-13 * scale) break;
    }

    // Boundary points along a coarse ray fan from the feasible point.
    const SphereGrid& fan = cached_sphere_grid(n - 1, n == 2 ? 64 : 16);
    for (const Vec& w : fan.nodes) {
        double t = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < region.directions.size(); ++i) {
            double den = dot(region.directions[i], w);
            if (den > 1e-12) {
                double slack = region.offsets[i] - dot(x0, region.directions[i]);
                t = std::min(t, std::max(slack, 0.0) / den);
            }
        }
        if (!std::isfinite(t)) t = 0.0;
        region.hull_points.push_back(x0 + t * w);
    }
    return region;
}

LemmaReport check_uf_in_hull(const BodySpec& core_spec, double delta, int dir_res,
                             double tol, const FoldConfig& cfg) {
    if (delta <= 0.0) throw std::invalid_argument("check_uf_in_hull: delta must be positive");
    BodySpec spec = core_spec;
    spec.delta = delta;
    ConvexBody body = build_body(spec);
    if (tol <= 0.0) tol = 1e-6 * std::max(body.diameter_core, 1e-9);

    const SphereGrid& dirs = cached_sphere_grid(body.dim() - 1, dir_res);
    std::vector<Vec> samples = boundary_samples(body, cfg.boundary_samples);

    LemmaReport report;
    report.lemma_id = "uf_in_core_hull";
    report.params = {{"delta", delta}, {"dir_res", static_cast<double>(dir_res)},
                     {"tol", tol}, {"samples", static_cast<double>(samples.size())}};
    double worst = -std::numeric_limits<double>::infinity();
    Vec worst_dir;
    for (const Vec& v : dirs.nodes) {
        double u = fold_offset_sampled(body, v, samples, cfg);
        double m_core = support(body, v) - delta;
        double margin = u - m_core;
        if (margin > worst) {
            worst = margin;
            worst_dir = v;
        }
    }
    report.worst_margin = worst;
    CaseResult c;
    c.name = "worst_direction";
    for (int i = 0; i < worst_dir.dim(); ++i)
        c.params["v" + std::to_string(i)] = worst_dir[i];
    c.value = worst;
    c.error = tol;
    c.verdict = worst <= tol ? Verdict::Pass : Verdict::Fail;
    report.cases.push_back(c);
    return report;
}

}  // namespace riesz
