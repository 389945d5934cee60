#include "riesz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace riesz {

namespace {

void require_unit(const Vec& v) {
    if (std::abs(norm(v) - 1.0) > 1e-12)
        throw std::invalid_argument("direction must be a unit vector");
}

// Solves the equality-constrained least squares problem
//   min |sum_i beta_i s_i|^2  s.t.  sum_i beta_i = 1
// over the affine hull of the working set. Gaussian elimination with partial
// pivoting on the bordered Gram system.
bool affine_minimizer(const std::vector<Vec>& s, std::vector<double>& beta) {
    const int k = static_cast<int>(s.size());
    const int m = k + 1;
    // A = [G 1; 1^T 0], rhs = [0; 1]
    std::vector<double> A(static_cast<size_t>(m) * m, 0.0);
    std::vector<double> rhs(m, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) A[i * m + j] = dot(s[i], s[j]);
        A[i * m + k] = 1.0;
        A[k * m + i] = 1.0;
    }
    rhs[k] = 1.0;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r * m + col]) > std::abs(A[piv * m + col])) piv = r;
        if (std::abs(A[piv * m + col]) < 1e-300) return false;
        if (piv != col) {
            for (int c = 0; c < m; ++c) std::swap(A[piv * m + c], A[col * m + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        for (int r = col + 1; r < m; ++r) {
            double f = A[r * m + col] / A[col * m + col];
            if (f == 0.0) continue;
            for (int c = col; c < m; ++c) A[r * m + c] -= f * A[col * m + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> sol(m, 0.0);
    for (int r = m - 1; r >= 0; --r) {
        double acc = rhs[r];
        for (int c = r + 1; c < m; ++c) acc -= A[r * m + c] * sol[c];
        sol[r] = acc / A[r * m + r];
    }
    beta.assign(sol.begin(), sol.begin() + k);
    return true;
}

}  // namespace

// Wolfe's min-norm-point algorithm on the translated vertex set.
Vec nearest_point_in_hull(const std::vector<Vec>& points, const Vec& q) {
    if (points.empty()) throw std::invalid_argument("nearest_point_in_hull: empty point set");
    const int m = static_cast<int>(points.size());

    double scale2 = 0.0;
    int best = 0;
    double best_norm2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        Vec s = points[i] - q;
        double n2 = dot(s, s);
        scale2 = std::max(scale2, n2);
        if (n2 < best_norm2) {
            best_norm2 = n2;
            best = i;
        }
    }
    const double tol = 1e-14 * std::max(1.0, scale2);

    std::vector<int> idx{best};
    std::vector<Vec> S{points[best] - q};
    std::vector<double> lam{1.0};
    Vec x = S[0];

    for (int major = 0; major < 200; ++major) {
        double xx = dot(x, x);
        // most violating vertex
        int j = -1;
        double dmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double d = dot(points[i] - q, x);
            if (d < dmin) {
                dmin = d;
                j = i;
            }
        }
        if (dmin >= xx - tol) break;  // optimality
        if (std::find(idx.begin(), idx.end(), j) != idx.end()) break;
        idx.push_back(j);
        S.push_back(points[j] - q);
        lam.push_back(0.0);

        for (int minor = 0; minor < 100; ++minor) {
            std::vector<double> beta;
            if (!affine_minimizer(S, beta)) {
                // degenerate working set: drop the smallest-weight member
                int drop = static_cast<int>(std::min_element(lam.begin(), lam.end()) - lam.begin());
                idx.erase(idx.begin() + drop);
                S.erase(S.begin() + drop);
                lam.erase(lam.begin() + drop);
                if (S.size() <= 1) break;
                continue;
            }
            double bmin = *std::min_element(beta.begin(), beta.end());
            if (bmin >= -1e-12) {
                lam = beta;
                break;
            }
            double theta = 1.0;
            for (size_t i = 0; i < lam.size(); ++i)
                if (beta[i] < 1e-12 && lam[i] - beta[i] > 0.0)
                    theta = std::min(theta, lam[i] / (lam[i] - beta[i]));
            for (size_t i = 0; i < lam.size(); ++i)
                lam[i] = std::max(0.0, theta * beta[i] + (1.0 - theta) * lam[i]);
            // prune zeroed members
            for (int i = static_cast<int>(lam.size()) - 1; i >= 0; --i) {
                if (lam[i] <= 1e-12 && lam.size() > 1) {
                    idx.erase(idx.begin() + i);
                    S.erase(S.begin() + i);
                    lam.erase(lam.begin() + i);
                }
            }
        }
        double lsum = 0.0;
        for (double l : lam) lsum += l;
        x = Vec(q.dim());
        for (size_t i = 0; i < S.size(); ++i) x += (lam[i] / lsum) * S[i];
    }
    return q + x;
}

ConvexBody build_body(const BodySpec& spec) {
    const int n = spec.dimension;
    if (n < 2 || n > kMaxDim) throw std::invalid_argument("build_body: dimension must be in [2,10]");
    if (spec.core_vertices.empty()) throw std::invalid_argument("build_body: empty core vertex set");
    if (spec.delta < 0.0) throw std::invalid_argument("build_body: delta must be nonnegative");
    for (const Vec& v : spec.core_vertices) {
        if (v.dim() != n) throw std::invalid_argument("build_body: vertex dimension mismatch");
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(v[i])) throw std::invalid_argument("build_body: non-finite vertex coordinate");
    }

    ConvexBody body;
    body.spec = spec;

    double d = 0.0;
    for (size_t i = 0; i < spec.core_vertices.size(); ++i)
        for (size_t j = i + 1; j < spec.core_vertices.size(); ++j)
            d = std::max(d, dist(spec.core_vertices[i], spec.core_vertices[j]));
    body.diameter_core = d;

    if (spec.delta == 0.0) {
        // conv(core) must be full-dimensional: affine rank of vertex
        // differences must be n (Gram-Schmidt with relative tolerance).
        std::vector<Vec> basis;
        const Vec& v0 = spec.core_vertices[0];
        for (size_t i = 1; i < spec.core_vertices.size(); ++i) {
            Vec w = spec.core_vertices[i] - v0;
            for (const Vec& b : basis) w -= dot(w, b) * b;
            double m = norm(w);
            if (m > 1e-9 * std::max(1.0, d)) basis.push_back(w * (1.0 / m));
        }
        if (static_cast<int>(basis.size()) < n)
            throw std::invalid_argument("build_body: delta=0 requires a full-dimensional core hull");
    }

    Vec centroid(n);
    for (const Vec& v : spec.core_vertices) centroid += v;
    centroid *= 1.0 / static_cast<double>(spec.core_vertices.size());
    body.base_point = spec.base_point.value_or(centroid);
    if (body.base_point.dim() != n) throw std::invalid_argument("build_body: base_point dimension mismatch");

    double bd = dist_to_core(body, body.base_point);
    double clearance = 1e-9 * std::max(1.0, body.scale());
    if (spec.delta > 0.0) {
        if (bd > spec.delta - clearance)
            throw std::invalid_argument("build_body: base_point is not strictly interior");
    } else {
        // delta=0: probe a small ball around the base point
        double eps = 1e-7 * std::max(d, 1.0);
        for (int j = 0; j < n; ++j)
            for (double sgn : {-1.0, 1.0}) {
                Vec p = body.base_point + sgn * eps * unit_axis(n, j);
                if (dist_to_core(body, p) > 1e-12 * std::max(1.0, d))
                    throw std::invalid_argument("build_body: base_point is not strictly interior");
            }
    }
    return body;
}

Vec project_to_core(const ConvexBody& body, const Vec& p) {
    return nearest_point_in_hull(body.spec.core_vertices, p);
}

double dist_to_core(const ConvexBody& body, const Vec& p) {
    return dist(p, project_to_core(body, p));
}

double support(const ConvexBody& body, const Vec& v) {
    require_unit(v);
    double m = -std::numeric_limits<double>::infinity();
    for (const Vec& w : body.spec.core_vertices) m = std::max(m, dot(w, v));
    return m + body.delta();
}

bool contains(const ConvexBody& body, const Vec& p, double tol) {
    return dist_to_core(body, p) <= body.delta() + tol;
}

double radial(const ConvexBody& body, const Vec& x, const Vec& v, double abs_tol) {
    require_unit(v);
    if (abs_tol <= 0.0) abs_tol = 1e-10 * std::max(body.scale(), 1e-12);
    // For delta=0 the interior distance is exactly 0; shift the level set a hair
    // so the bracketed function is strictly negative inside.
    const double eps_in = body.delta() == 0.0 ? 1e-12 * std::max(body.scale(), 1.0) : 0.0;
    auto g = [&](double a) { return dist_to_core(body, x + a * v) - body.delta() - eps_in; };
    double g0 = g(0.0);
    if (g0 >= 0.0) throw std::invalid_argument("radial: x is not strictly interior");

    double far = 0.0;
    for (const Vec& w : body.spec.core_vertices) far = std::max(far, dist(x, w));
    double hi = far + body.delta() + abs_tol;
    double ghi = g(hi);
    for (int k = 0; k < 8 && ghi < 0.0; ++k) {
        hi *= 2.0;
        ghi = g(hi);
    }
    if (ghi < 0.0) throw std::runtime_error("radial: failed to bracket the boundary");

    // Illinois regula falsi on the convex bracketed function
    double lo = 0.0, glo = g0;
    double flo = glo, fhi = ghi;
    for (int it = 0; it < 200 && hi - lo > abs_tol; ++it) {
        double mid = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm < 0.0) {
            lo = mid;
            flo = gm;
            fhi *= 0.5;
        } else {
            hi = mid;
            fhi = gm;
            flo *= 0.5;
        }
        if (it % 7 == 6) {  // occasional plain bisection guards stagnation
            double m2 = 0.5 * (lo + hi);
            double g2 = g(m2);
            if (g2 < 0.0) {
                lo = m2;
                flo = g2;
            } else {
                hi = m2;
                fhi = g2;
            }
        }
    }
    return 0.5 * (lo + hi);
}

Vec reflect(const Vec& p, const Vec& v, double b) {
    require_unit(v);
    return p - (2.0 * (dot(p, v) - b)) * v;
}

double section_radial(const ConvexBody& body, const Vec& x, const Vec& axis,
                      const Vec& normal_dir, double phi, double abs_tol) {
    require_unit(axis);
    require_unit(normal_dir);
    if (std::abs(dot(axis, normal_dir)) > 1e-9)
        throw std::invalid_argument("section_radial: normal_dir must be orthogonal to axis");
    Vec v = std::cos(phi) * axis + std::sin(phi) * normal_dir;
    return radial(body, x, normalized(v), abs_tol);
}

Vec boundary_normal(const ConvexBody& body, const Vec& x, const Vec& v, double rho) {
    double h = 1e-7 * std::max(body.scale(), 1.0);
    for (int attempt = 0; attempt < 6; ++attempt) {
        Vec p_out = x + (rho + h) * v;
        Vec q = project_to_core(body, p_out);
        double dq = dist(p_out, q);
        if (dq > 1e-14 * std::max(body.scale(), 1.0)) return (p_out - q) * (1.0 / dq);
        h *= 10.0;
    }
    throw std::runtime_error("boundary_normal: degenerate projection");
}

std::vector<Vec> orthogonal_complement(const Vec& axis) {
    const int n = axis.dim();
    std::vector<Vec> basis{normalized(axis)};
    for (int j = 0; j < n && static_cast<int>(basis.size()) < n; ++j) {
        Vec w = unit_axis(n, j);
        for (const Vec& b : basis) w -= dot(w, b) * b;
        double m = norm(w);
        if (m > 1e-8) basis.push_back(w * (1.0 / m));
    }
    if (static_cast<int>(basis.size()) != n)
        throw std::runtime_error("orthogonal_complement: failed to complete basis");
    return {basis.begin() + 1, basis.end()};
}

}  // namespace riesz
