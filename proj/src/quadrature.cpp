#include "riesz/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

// Gauss-Kronrod 7/15 pair (positive half, descending nodes).
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790,
    0.38183005050511894495, 0.41795918367346938776};

struct Gk15 {
    double value;
    double error;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    double value = resk * h;
    double err = std::abs((resk - resg) * h);
    // QUADPACK-style rescaling of the raw difference
    double resabs = 0.0;
    for (int i = 0; i < 15; ++i)
        resabs += std::abs(fv[i]) * kWgk[i < 8 ? i : 14 - i];
    resabs *= std::abs(h);
    if (resabs > 0.0 && err > 0.0) {
        double r = std::pow(200.0 * err / resabs, 1.5);
        err = resabs * std::min(1.0, r);
    }
    return {value, err};
}

// budget caps the total number of panel evaluations: integrands built on
// iterative geometry (root-finding noise floor) can otherwise drive the
// bisection into exponentially many panels that never meet the tolerance.
void adapt(const std::function<double(double)>& f, double a, double b, double tol_abs,
           int depth, long& budget, QuadResult& out) {
    Gk15 est = gk15(f, a, b);
    --budget;
    if (est.error <= tol_abs || depth >= 60 || budget <= 0) {
        if (est.error > tol_abs) out.converged = false;
        out.value += est.value;
        out.error_estimate += est.error;
        return;
    }
    double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol_abs, depth + 1, budget, out);
    adapt(f, mid, b, 0.5 * tol_abs, depth + 1, budget, out);
}

}  // namespace

double sphere_area(int k) {
    return 2.0 * std::pow(kPi, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

SphereGrid sphere_grid(int k, int resolution) {
    if (k < 0 || k > 9) throw std::invalid_argument("sphere_grid: k out of range [0,9]");
    SphereGrid g;
    g.dim_sphere = k;
    if (k == 0) {
        g.nodes = {Vec{1.0}, Vec{-1.0}};
        g.weights = {1.0, 1.0};
        return g;
    }
    if (resolution < 4) throw std::invalid_argument("sphere_grid: resolution must be >= 4");
    if (k == 1) {
        g.nodes.reserve(resolution);
        g.weights.assign(resolution, 2.0 * kPi / resolution);
        for (int i = 0; i < resolution; ++i) {
            double t = 2.0 * kPi * i / resolution;
            g.nodes.push_back(Vec{std::cos(t), std::sin(t)});
        }
        return g;
    }
    // k>=2: polar angle theta in [0,pi] with weight sin^{k-1}(theta),
    // tensored with S^{k-1}; azimuth gets twice the polar resolution.
    SphereGrid sub = sphere_grid(k - 1, k - 1 == 1 ? 2 * resolution : resolution);
    std::vector<double> xs, ws;
    gauss_legendre(resolution, xs, ws);
    double total = 0.0;
    for (int i = 0; i < resolution; ++i) {
        double theta = 0.5 * kPi * (xs[i] + 1.0);
        double wt = 0.5 * kPi * ws[i] * std::pow(std::sin(theta), k - 1);
        for (size_t j = 0; j < sub.nodes.size(); ++j) {
            Vec node(k + 1);
            for (int c = 0; c < k; ++c) node[c] = std::sin(theta) * sub.nodes[j][c];
            node[k] = std::cos(theta);
            double w = wt * sub.weights[j];
            g.nodes.push_back(normalized(node));
            g.weights.push_back(w);
            total += w;
        }
    }
    double fix = sphere_area(k) / total;
    for (double& w : g.weights) w *= fix;
    return g;
}

const SphereGrid& cached_sphere_grid(int k, int resolution) {
    static std::map<std::pair<int, int>, SphereGrid> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(k, resolution);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, sphere_grid(k, resolution)).first;
    return it->second;
}

QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("adaptive_quad: requires a < b");
    Gk15 first = gk15(f, a, b);
    double tol_abs = tol * std::max(1.0, std::abs(first.value));
    QuadResult out;
    long budget = 20000;
    adapt(f, a, b, tol_abs, 0, budget, out);
    return out;
}

}  // namespace riesz
