#include "riesz/centers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riesz {

namespace {

double halton(uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

constexpr int kHaltonBases[kMaxDim] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

struct StartOutcome {
    Vec point;
    double value;
    bool converged;
};

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

}  // namespace

CenterResult find_center(const ConvexBody& body, const PotentialParams& params,
                         const CenterConfig& cfg) {
    params.validate(body.dim());
    const int n = body.dim();
    const double diam_omega = body.diameter_core + 2.0 * body.delta();
    const double step_tol = cfg.step_tol > 0.0 ? cfg.step_tol : 1e-8 * std::max(diam_omega, 1e-9);
    const bool minimizing = !params.log_mode && params.alpha > n;
    const double sign = minimizing ? -1.0 : 1.0;

    // Search domain: conv(core) for delta > 0, hull of the unfolded region
    // for a plain polytope.
    std::vector<Vec> domain;
    if (body.delta() > 0.0) {
        domain = body.spec.core_vertices;
    } else {
        int res = cfg.uf_dir_res > 0 ? cfg.uf_dir_res : (n == 2 ? 720 : (n == 3 ? 32 : 16));
        domain = unfolded_region(body, res).hull_points;
    }
    auto project = [&](const Vec& p) { return nearest_point_in_hull(domain, p); };

    double domain_diam = 0.0;
    Vec lo = domain[0], hi = domain[0];
    Vec mean(n);
    for (const Vec& p : domain) {
        mean += p;
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    mean *= 1.0 / static_cast<double>(domain.size());
    for (size_t i = 0; i < domain.size(); ++i)
        for (size_t j = i + 1; j < domain.size(); ++j)
            domain_diam = std::max(domain_diam, dist(domain[i], domain[j]));

    const int starts = std::max(cfg.starts, 1);
    std::vector<StartOutcome> outcomes;
    outcomes.reserve(starts);

    for (int s = 0; s < starts; ++s) {
        Vec x;
        if (s == 0) {
            x = project(mean);
        } else {
            Vec seed(n);
            for (int i = 0; i < n; ++i)
                seed[i] = lo[i] + (hi[i] - lo[i]) * halton(cfg.seed_offset + s, kHaltonBases[i]);
            x = project(seed);
        }

        double f = potential(body, x, params);
        bool converged = domain_diam <= step_tol;  // point-like domain
        double trust = 0.1 * std::max(domain_diam, body.diameter_core);
        if (trust <= 0.0) converged = true;

        for (int iter = 0; iter < cfg.max_iters && !converged; ++iter) {
            PotGrad pg = value_and_gradient_radial(body, x, params);
            f = pg.value;
            Vec dir = sign * pg.grad;
            double gnorm = norm(dir);
            if (gnorm == 0.0) {
                converged = true;
                break;
            }
            double t = trust / gnorm;
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                Vec xn = project(x + t * dir);
                Vec step = xn - x;
                double sn = norm(step);
                if (sn < step_tol) {
                    converged = true;
                    break;
                }
                double fn = potential(body, xn, params);
                if (sign * (fn - f) >= 1e-4 * dot(dir, step)) {
                    x = xn;
                    f = fn;
                    accepted = true;
                    trust = std::min(2.0 * t * gnorm, 0.5 * std::max(domain_diam, body.diameter_core));
                    if (sn < step_tol) converged = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted && !converged) converged = true;  // no ascent direction left
        }
        outcomes.push_back({x, f, converged});
    }

    int converged_count = 0;
    for (const auto& o : outcomes)
        if (o.converged) ++converged_count;
    if (converged_count == 0) throw std::runtime_error("find_center: no start converged");

    // Best extremizer; deterministic lexicographic tie-break.
    int best = -1;
    for (int i = 0; i < starts; ++i) {
        if (!outcomes[i].converged) continue;
        if (best < 0) {
            best = i;
            continue;
        }
        double dv = sign * (outcomes[i].value - outcomes[best].value);
        if (dv > 0.0 || (dv == 0.0 && lex_less(outcomes[i].point, outcomes[best].point))) best = i;
    }

    CenterResult result;
    result.point = outcomes[best].point;
    result.value = outcomes[best].value;
    result.starts = starts;
    result.minimizing = minimizing;
    result.all_converged = converged_count == starts;

    double agree = 0.0;
    for (int i = 0; i < starts; ++i) {
        if (!outcomes[i].converged) continue;
        for (int j = i + 1; j < starts; ++j)
            if (outcomes[j].converged)
                agree = std::max(agree, dist(outcomes[i].point, outcomes[j].point));
    }
    result.agreement_radius = agree;

    // Projected-gradient mapping norm at the reported point.
    {
        PotGrad pg = value_and_gradient_radial(body, result.point, params);
        Vec dir = sign * pg.grad;
        double gnorm = norm(dir);
        double tau = 1e-6 * std::max(domain_diam, 1.0) / (1.0 + gnorm);
        Vec moved = nearest_point_in_hull(domain, result.point + tau * dir);
        result.grad_norm = dist(moved, result.point) / tau;
        result.on_domain_boundary = result.grad_norm < 0.5 * gnorm;
    }
    return result;
}

double volume(const ConvexBody& body, int sphere_res) {
    const int n = body.dim();
    int res = sphere_res > 0 ? sphere_res : default_sphere_res(n);
    const SphereGrid& grid = cached_sphere_grid(n - 1, res);
    double vol = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        double rho = radial(body, body.base_point, grid.nodes[i]);
        vol += grid.weights[i] * std::pow(rho, n) / n;
    }
    return vol;
}

Vec centroid(const ConvexBody& body, int sphere_res) {
    const int n = body.dim();
    int res = sphere_res > 0 ? sphere_res : default_sphere_res(n);
    const SphereGrid& grid = cached_sphere_grid(n - 1, res);
    const Vec& x0 = body.base_point;
    double vol = 0.0;
    Vec moment(n);
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const Vec& v = grid.nodes[i];
        double rho = radial(body, x0, v);
        double rn = std::pow(rho, n);
        vol += grid.weights[i] * rn / n;
        moment += grid.weights[i] * (rn / n) * x0;
        moment += grid.weights[i] * (std::pow(rho, n + 1) / (n + 1)) * v;
    }
    return moment * (1.0 / vol);
}

}  // namespace riesz
