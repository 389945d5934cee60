#include "riesz/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riesz {

namespace {

void check_interior(const ConvexBody& body, const Vec& x) {
    if (x.dim() != body.dim()) throw std::invalid_argument("potential: point dimension mismatch");
    double clearance = 1e-6 * std::max(body.scale(), 1e-12);
    if (body.delta() > 0.0 && dist_to_core(body, x) > body.delta() - clearance)
        throw std::invalid_argument("potential: x is not strictly interior");
}

// Radial integrand of the potential and its derivative in rho.
double radial_value_term(double rho, int n, const PotentialParams& p) {
    if (p.log_mode) {
        double rn = std::pow(rho, n);
        return rn / (n * static_cast<double>(n)) - rn * std::log(rho) / n;
    }
    return std::pow(rho, p.alpha) / p.alpha;
}

double radial_deriv_term(double rho, int n, const PotentialParams& p) {
    if (p.log_mode) return -std::pow(rho, n - 1) * std::log(rho);
    return std::pow(rho, p.alpha - 1.0);
}

struct SectionPoint {
    double rho;
    double ds_dphi;
};

// Section curve Gamma = dOmega ^ span(axis, gamma) about x, parametrized by
// the planar angle phi. Local coordinates: c = rho cos(phi) along the axis,
// s = rho sin(phi) along gamma. ds/dphi follows from the boundary normal:
// the curve tangent within the plane is orthogonal to the in-plane normal.
SectionPoint section_point(const ConvexBody& body, const Vec& x, const Vec& axis,
                           const Vec& gamma, double phi) {
    Vec v = normalized(std::cos(phi) * axis + std::sin(phi) * gamma);
    double rho = radial(body, x, v);
    Vec nu = boundary_normal(body, x, v, rho);
    double ne = dot(nu, axis);
    double ng = dot(nu, gamma);
    double c = rho * std::cos(phi);
    double s = rho * std::sin(phi);
    double tc = -ng, ts = ne;
    double cr = c * ts - s * tc;  // > 0 for the counterclockwise orientation
    if (cr < 0.0) {
        tc = -tc;
        ts = -ts;
        cr = -cr;
    }
    cr = std::max(cr, 1e-14 * rho * rho);
    return {rho, ts * rho * rho / cr};
}

// Directions gamma of the section grid on S^{n-2}, embedded orthogonally
// to the axis.
std::vector<std::pair<Vec, double>> section_directions(const ConvexBody& body, const Vec& axis,
                                                       int section_res) {
    const int n = body.dim();
    std::vector<Vec> basis = orthogonal_complement(axis);
    const SphereGrid& grid = cached_sphere_grid(n - 2, std::max(section_res, 4));
    std::vector<std::pair<Vec, double>> dirs;
    dirs.reserve(grid.nodes.size());
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        Vec gamma(n);
        for (int c = 0; c < n - 1; ++c) gamma += grid.nodes[i][c] * basis[c];
        dirs.emplace_back(normalized(gamma), grid.weights[i]);
    }
    return dirs;
}

// Integrates weight(rho, phi) * ds/dphi over phi in (0, pi) for one section,
// then sums over the S^{n-2} grid.
ValueErr boundary_section_integral(
    const ConvexBody& body, const Vec& x, int j, const PotentialParams& params,
    const std::function<double(double rho, double phi)>& weight) {
    const int n = body.dim();
    Vec axis = unit_axis(n, j);
    int res = params.section_res > 0 ? params.section_res : default_section_res(n);
    auto dirs = section_directions(body, axis, res);
    ValueErr out;
    for (const auto& [gamma, w] : dirs) {
        QuadResult q = adaptive_quad(
            [&](double phi) {
                SectionPoint sp = section_point(body, x, axis, gamma, phi);
                return weight(sp.rho, phi) * sp.ds_dphi;
            },
            0.0, std::numbers::pi, params.quad_tol);
        out.value += w * q.value;
        out.error += w * q.error_estimate;
    }
    return out;
}

}  // namespace

void PotentialParams::validate(int) const {
    if (!log_mode && alpha <= 0.0) throw std::invalid_argument("PotentialParams: alpha must be positive");
}

int default_sphere_res(int n) {
    if (n == 2) return 512;
    if (n == 3) return 64;
    return 32;
}

int default_section_res(int n) {
    if (n <= 3) return 64;
    return 16;
}

double potential(const ConvexBody& body, const Vec& x, const PotentialParams& params) {
    params.validate(body.dim());
    check_interior(body, x);
    const int n = body.dim();
    int res = params.sphere_res > 0 ? params.sphere_res : default_sphere_res(n);
    const SphereGrid& grid = cached_sphere_grid(n - 1, res);
    double acc = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        double rho = radial(body, x, grid.nodes[i]);
        acc += grid.weights[i] * radial_value_term(rho, n, params);
    }
    return acc;
}

ValueErr gradient_component(const ConvexBody& body, const Vec& x, int j,
                            const PotentialParams& params) {
    params.validate(body.dim());
    check_interior(body, x);
    const int n = body.dim();
    // dV/dx_j = -int_{dOmega} kernel(|x-y|) e_j.n dsigma with
    // kernel r^{alpha-n} (Riesz) or log(1/r) (log mode);
    // e_j.n dsigma = s^{n-2} ds over the sections.
    ValueErr out = boundary_section_integral(
        body, x, j, params, [&](double rho, double phi) {
            double s = rho * std::sin(phi);
            double kernel = params.log_mode ? -std::log(rho) : std::pow(rho, params.alpha - n);
            return -kernel * std::pow(s, n - 2);
        });
    return out;
}

Vec gradient(const ConvexBody& body, const Vec& x, const PotentialParams& params) {
    Vec g(body.dim());
    for (int j = 0; j < body.dim(); ++j) g[j] = gradient_component(body, x, j, params).value;
    return g;
}

ValueErr hessian_diag(const ConvexBody& body, const Vec& x, int j,
                      const PotentialParams& params) {
    params.validate(body.dim());
    check_interior(body, x);
    const int n = body.dim();
    // Riesz: (n-alpha) * int (x_j - y_j) r^{alpha-n-2} e_j.n dsigma,
    // log:        +1 * int (x_j - y_j) r^{-2}          e_j.n dsigma,
    // with x_j - y_j = -rho cos(phi) in section coordinates.
    double prefactor = params.log_mode ? 1.0 : (n - params.alpha);
    ValueErr out = boundary_section_integral(
        body, x, j, params, [&](double rho, double phi) {
            double s = rho * std::sin(phi);
            double kernel = params.log_mode ? std::pow(rho, -2.0)
                                            : std::pow(rho, params.alpha - n - 2.0);
            return kernel * (-rho * std::cos(phi)) * std::pow(s, n - 2);
        });
    out.value *= prefactor;
    out.error *= std::abs(prefactor);
    return out;
}

ValueErr section_line_integral(const ConvexBody& body, const Vec& x, const Vec& axis,
                               const Vec& gamma, double alpha, int m_kernel,
                               double quad_tol) {
    QuadResult q = adaptive_quad(
        [&](double phi) {
            SectionPoint sp = section_point(body, x, axis, gamma, phi);
            double s = sp.rho * std::sin(phi);
            return std::pow(sp.rho, alpha - m_kernel - 2.0) * (-sp.rho * std::cos(phi)) *
                   std::pow(s, m_kernel - 2) * sp.ds_dphi;
        },
        0.0, std::numbers::pi, quad_tol);
    return {q.value, q.error_estimate};
}

PotGrad value_and_gradient_radial(const ConvexBody& body, const Vec& x,
                                  const PotentialParams& params) {
    params.validate(body.dim());
    check_interior(body, x);
    const int n = body.dim();
    int res = params.sphere_res > 0 ? params.sphere_res : default_sphere_res(n);
    const SphereGrid& grid = cached_sphere_grid(n - 1, res);
    PotGrad out;
    out.grad = Vec(n);
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const Vec& v = grid.nodes[i];
        double rho = radial(body, x, v);
        out.value += grid.weights[i] * radial_value_term(rho, n, params);
        Vec nu = boundary_normal(body, x, v, rho);
        double vn = std::max(dot(v, nu), 1e-9);
        double coef = -grid.weights[i] * radial_deriv_term(rho, n, params) / vn;
        out.grad += coef * nu;
    }
    return out;
}

}  // namespace riesz
