#include <doctest.h>

#include <cmath>
#include <random>

#include "riesz/constants.hpp"
#include "riesz/verify.hpp"

using namespace riesz;

namespace {

// Fixed midpoint-rule reference for F in the original y2 parametrization.
double F_midpoint(int n, double alpha, double a, double xi, int nodes) {
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        double y = (i + 0.5) / nodes;
        double u = a * (1.0 - y) - xi;
        sum += std::pow(u * u + y * y, 0.5 * (alpha - n) - 1.0) * (-u) * std::pow(y, n - 2);
    }
    return sum / nodes;
}

std::vector<Vec> rotate2(const std::vector<Vec>& vs, double t) {
    std::vector<Vec> out;
    for (const Vec& v : vs)
        out.push_back(Vec{std::cos(t) * v[0] - std::sin(t) * v[1],
                          std::sin(t) * v[0] + std::cos(t) * v[1]});
    return out;
}

}  // namespace

TEST_CASE("F_integral has the trivially negative sign at xi = 0") {
    for (int n : {2, 3, 4})
        for (double a : {0.5, 2.0, 10.0}) {
            double alpha = 0.5 * (1.0 + n + 1.0);
            ValueErr f = F_integral(n, alpha, a, 0.0);
            CHECK(f.value < 0.0);
            CHECK(f.error < std::abs(f.value));
        }
}

TEST_CASE("F_integral matches the midpoint oracle") {
    struct Tuple {
        int n;
        double alpha, a, xi;
    };
    for (Tuple t : {Tuple{2, 2.0, 2.0, 1.0}, Tuple{3, 3.5, 1.5, 0.4},
                    Tuple{4, 2.5, 3.0, 1.2}, Tuple{2, 1.3, 0.8, 0.3}}) {
        double ref = F_midpoint(t.n, t.alpha, t.a, t.xi, 100000);
        ValueErr f = F_integral(t.n, t.alpha, t.a, t.xi);
        CHECK(f.value == doctest::Approx(ref).epsilon(1e-5));
    }
}

TEST_CASE("Corollary instance: F at a0 is negative") {
    double a = a0(3, 3.5, 1.0);
    ValueErr f = F_integral(3, 3.5, a, 1.0);
    CHECK(f.value < 0.0);
    CHECK(std::abs(f.value) > 10.0 * f.error);
    CHECK(f.value == doctest::Approx(F_midpoint(3, 3.5, a, 1.0, 200000)).epsilon(1e-4));
}

TEST_CASE("F_integral domain errors") {
    CHECK_THROWS_AS(F_integral(2, 2.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(F_integral(2, 2.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(F_integral(2, 2.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("transformed_integral examples are negative") {
    double a1 = psi(3, 3.25, 1.0) * 1.0;
    ValueErr t1 = transformed_integral(3, 3.25, a1, 1.0);
    CHECK(t1.value < 0.0);
    CHECK(std::abs(t1.value) > 10.0 * t1.error);

    double a2 = psi(4, 3.0, 2.0) * 2.0;
    ValueErr t2 = transformed_integral(4, 3.0, a2, 2.0);
    CHECK(t2.value < 0.0);
}

TEST_CASE("change_of_variables_check passes on a tuple grid") {
    for (int n : {2, 3, 4})
        for (double alpha : {1.5, n + 0.5})
            for (double a : {0.7, 2.0, 6.0})
                for (double frac : {0.0, 0.3, 0.7}) {
                    LemmaReport r = change_of_variables_check(n, alpha, a, frac * a);
                    CHECK(r.overall() == Verdict::Pass);
                }
}

TEST_CASE("F and the transformed integral share sign on random tuples") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 40; ++k) {
        int n = 2 + static_cast<int>(u(rng) * 3);
        double alpha = 1.0 + u(rng) * n;  // (1, n+1)
        double a = 0.3 + 8.0 * u(rng);
        double xi = 0.9 * a * u(rng);
        ValueErr f = F_integral(n, alpha, a, xi);
        double c = (a * xi + 1.0) / (a - xi);
        ValueErr t = transformed_integral(n, alpha, a, c);
        REQUIRE(std::abs(f.value) > f.error);
        REQUIRE(std::abs(t.value) > t.error);
        CHECK((f.value < 0.0) == (t.value < 0.0));
    }
}

TEST_CASE("verify_lemma32 default grid: 60 conclusive negatives") {
    LemmaReport r = verify_lemma32();
    CHECK(r.cases.size() == 60);
    CHECK(r.all_pass());
    CHECK(r.worst_margin > 0.0);
}

TEST_CASE("verify_keylemma2 asserts only inside its hypothesis") {
    BodySpec seg;
    seg.dimension = 2;
    seg.core_vertices = {Vec{-0.5, 0.0}, Vec{0.5, 0.0}};
    double thr = f_const(2, 2.0) * 1.0;

    LemmaReport in = verify_keylemma2(seg, thr + 0.5, 2.0, 2, {0.0, 0.25});
    CHECK(in.overall() == Verdict::Pass);

    LemmaReport out = verify_keylemma2(seg, 0.25 * thr, 2.0, 2, {0.0});
    for (const auto& c : out.cases) CHECK(c.verdict == Verdict::Inconclusive);
}

TEST_CASE("verify_hessian_signs is invariant under rotation (n = 2)") {
    BodySpec seg;
    seg.dimension = 2;
    seg.core_vertices = {Vec{-0.5, 0.0}, Vec{0.5, 0.0}};
    ConvexBody base = build_body([&] {
        BodySpec s = seg;
        s.delta = 2.0;
        return s;
    }());
    std::vector<Vec> pts = sample_core_points(base, 5);

    PotentialParams p{1.5};
    LemmaReport plain = verify_hessian_signs(seg, 2.0, p, pts);
    CHECK(plain.overall() == Verdict::Pass);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int k = 0; k < 2; ++k) {
        double t = u(rng);
        BodySpec rot = seg;
        rot.core_vertices = rotate2(seg.core_vertices, t);
        LemmaReport r = verify_hessian_signs(rot, 2.0, p, rotate2(pts, t));
        CHECK(r.overall() == plain.overall());
    }
}

TEST_CASE("verify_hessian_signs is invariant under rotation (n = 3)") {
    BodySpec seg;
    seg.dimension = 3;
    seg.core_vertices = {Vec{-0.5, 0.0, 0.0}, Vec{0.5, 0.0, 0.0}};
    double delta = (f_const(3, 2.5) + 1.0) * 1.0;
    std::vector<Vec> pts = {Vec{0.0, 0.0, 0.0}, Vec{0.3, 0.0, 0.0}};
    PotentialParams p{2.5};
    LemmaReport plain = verify_hessian_signs(seg, delta, p, pts);
    CHECK(plain.overall() == Verdict::Pass);

    // rotate the segment (and points) into the (x, z) plane diagonal
    double c = std::sqrt(0.5);
    auto rot = [&](const Vec& v) { return Vec{c * v[0], v[1], c * v[0]}; };
    BodySpec rseg = seg;
    for (Vec& v : rseg.core_vertices) v = rot(v);
    std::vector<Vec> rpts;
    for (const Vec& q : pts) rpts.push_back(rot(q));
    LemmaReport r = verify_hessian_signs(rseg, delta, p, rpts);
    CHECK(r.overall() == plain.overall());
}

TEST_CASE("sample_core_points stay in the hull and are distinct") {
    BodySpec tri;
    tri.dimension = 2;
    tri.core_vertices = {Vec{0.0, 0.0}, Vec{2.0, 0.0}, Vec{0.0, 2.0}};
    tri.delta = 1.0;
    ConvexBody b = build_body(tri);
    std::vector<Vec> pts = sample_core_points(b, 25);
    CHECK(pts.size() == 25);
    for (const Vec& p : pts) CHECK(dist_to_core(b, p) < 1e-9);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) CHECK(dist(pts[i], pts[j]) > 1e-9);
}
