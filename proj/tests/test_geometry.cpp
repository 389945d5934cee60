#include <doctest.h>

#include <cmath>
#include <random>

#include "riesz/geometry.hpp"

using namespace riesz;

namespace {

ConvexBody stadium2d(double half, double delta) {
    BodySpec s;
    s.dimension = 2;
    s.core_vertices = {Vec{-half, 0.0}, Vec{half, 0.0}};
    s.delta = delta;
    return build_body(s);
}

// Closed-form distance from p to the segment [a, b].
double seg_dist(const Vec& p, const Vec& a, const Vec& b) {
    Vec ab = b - a;
    double t = dot(p - a, ab) / dot(ab, ab);
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

}  // namespace

TEST_CASE("build_body validation") {
    BodySpec s;
    s.dimension = 2;
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // no vertices

    s.core_vertices = {Vec{0.0, 0.0}};
    s.delta = -1.0;
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // negative delta

    s.delta = 0.0;
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // flat hull, delta=0

    s.dimension = 1;
    s.delta = 1.0;
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // dimension < 2

    s.dimension = 11;
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // dimension > 10

    s.dimension = 2;
    s.core_vertices = {Vec{0.0, std::nan("")}};
    CHECK_THROWS_AS(build_body(s), std::invalid_argument);  // non-finite

    BodySpec tri;
    tri.dimension = 2;
    tri.core_vertices = {Vec{0.0, 0.0}, Vec{3.0, 0.0}, Vec{0.0, 3.0}};
    tri.delta = 0.0;
    ConvexBody b = build_body(tri);  // full-dimensional hull: delta=0 allowed
    CHECK(b.diameter_core == doctest::Approx(3.0 * std::sqrt(2.0)));
}

TEST_CASE("dist_to_core matches the segment oracle") {
    ConvexBody b = stadium2d(1.0, 0.5);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        Vec p{u(rng), u(rng)};
        double want = seg_dist(p, Vec{-1.0, 0.0}, Vec{1.0, 0.0});
        CHECK(dist_to_core(b, p) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("nearest_point_in_hull on a triangle") {
    std::vector<Vec> tri = {Vec{0.0, 0.0}, Vec{2.0, 0.0}, Vec{0.0, 2.0}};
    // interior point projects to itself
    Vec inside{0.5, 0.5};
    CHECK(dist(nearest_point_in_hull(tri, inside), inside) < 1e-10);
    // beyond a vertex projects to the vertex
    Vec far{3.0, -1.0};
    CHECK(dist(nearest_point_in_hull(tri, far), Vec{2.0, 0.0}) < 1e-9);
    // below the bottom edge projects straight up
    Vec below{1.0, -1.0};
    CHECK(dist(nearest_point_in_hull(tri, below), Vec{1.0, 0.0}) < 1e-9);
}

TEST_CASE("support values of a square core") {
    BodySpec s;
    s.dimension = 2;
    s.core_vertices = {Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{1.0, 1.0}, Vec{0.0, 1.0}};
    s.delta = 0.25;
    ConvexBody b = build_body(s);
    CHECK(support(b, Vec{1.0, 0.0}) == doctest::Approx(1.25));
    CHECK(support(b, Vec{-1.0, 0.0}) == doctest::Approx(0.25));
    double r = std::sqrt(0.5);
    CHECK(support(b, Vec{r, r}) == doctest::Approx(std::sqrt(2.0) + 0.25));
    CHECK_THROWS_AS(support(b, Vec{1.0, 1.0}), std::invalid_argument);  // not unit
}

TEST_CASE("radial function of a disk") {
    BodySpec s;
    s.dimension = 2;
    s.core_vertices = {Vec{0.0, 0.0}};
    s.delta = 1.0;
    ConvexBody b = build_body(s);
    Vec x{0.3, 0.0};
    for (int k = 0; k < 16; ++k) {
        double t = 2.0 * M_PI * k / 16.0;
        Vec v{std::cos(t), std::sin(t)};
        double rho = radial(b, x, v);
        // |x + rho v| = 1
        CHECK(norm(x + rho * v) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("radial hits the stadium boundary (segment oracle)") {
    ConvexBody b = stadium2d(1.0, 0.5);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-0.9, 0.9), ut(0.0, 2.0 * M_PI);
    for (int k = 0; k < 100; ++k) {
        Vec x{ux(rng), 0.2 * ux(rng)};
        double t = ut(rng);
        Vec v{std::cos(t), std::sin(t)};
        double rho = radial(b, x, v);
        double d = seg_dist(x + rho * v, Vec{-1.0, 0.0}, Vec{1.0, 0.0});
        CHECK(d == doctest::Approx(0.5).epsilon(1e-8));
    }
}

TEST_CASE("radial bounds delta <= rho <= delta + d for core points") {
    ConvexBody b = stadium2d(0.5, 2.0);
    for (double xi : {-0.5, -0.1, 0.0, 0.4}) {
        for (int k = 0; k < 12; ++k) {
            double t = 2.0 * M_PI * k / 12.0;
            double rho = radial(b, Vec{xi, 0.0}, Vec{std::cos(t), std::sin(t)});
            CHECK(rho >= 2.0 - 1e-9);
            CHECK(rho <= 3.0 + 1e-9);
        }
    }
}

TEST_CASE("radial is translation equivariant") {
    BodySpec s;
    s.dimension = 2;
    s.core_vertices = {Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}};
    s.delta = 0.7;
    ConvexBody b = build_body(s);
    BodySpec st = s;
    Vec shift{5.0, -3.0};
    for (Vec& v : st.core_vertices) v += shift;
    ConvexBody bt = build_body(st);
    Vec x{0.3, 0.3};
    for (int k = 0; k < 8; ++k) {
        double t = 2.0 * M_PI * k / 8.0 + 0.1;
        Vec v{std::cos(t), std::sin(t)};
        CHECK(radial(b, x, v) == doctest::Approx(radial(bt, x + shift, v)).epsilon(1e-10));
    }
}

TEST_CASE("reflect is an involutive isometry") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        Vec p{u(rng), u(rng), u(rng)};
        Vec q{u(rng), u(rng), u(rng)};
        Vec v = normalized(Vec{u(rng), u(rng), 1.0 + std::abs(u(rng))});
        double bb = u(rng);
        CHECK(dist(reflect(reflect(p, v, bb), v, bb), p) < 1e-12);
        CHECK(dist(reflect(p, v, bb), reflect(q, v, bb)) ==
              doctest::Approx(dist(p, q)).epsilon(1e-12));
        // the hyperplane is fixed
        Vec on = p - (dot(p, v) - bb) * v;
        CHECK(dist(reflect(on, v, bb), on) < 1e-10);
    }
}

TEST_CASE("boundary_normal on a disk points radially") {
    BodySpec s;
    s.dimension = 2;
    s.core_vertices = {Vec{0.1, -0.2}};
    s.delta = 1.5;
    ConvexBody b = build_body(s);
    Vec x{0.4, 0.1};
    for (int k = 0; k < 16; ++k) {
        double t = 2.0 * M_PI * k / 16.0;
        Vec v{std::cos(t), std::sin(t)};
        double rho = radial(b, x, v);
        Vec nu = boundary_normal(b, x, v, rho);
        CHECK(norm(nu) == doctest::Approx(1.0).epsilon(1e-9));
        Vec want = normalized(x + rho * v - Vec{0.1, -0.2});
        CHECK(dist(nu, want) < 1e-6);
        CHECK(dot(v, nu) > 0.0);  // ray exits through the boundary
    }
}

TEST_CASE("section_radial agrees with radial of the in-plane direction") {
    BodySpec s;
    s.dimension = 3;
    s.core_vertices = {Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
                       Vec{0.0, 0.0, 1.0}};
    s.delta = 1.0;
    ConvexBody b = build_body(s);
    Vec x{0.2, 0.2, 0.2};
    Vec axis = unit_axis(3, 0);
    Vec gamma = normalized(Vec{0.0, 1.0, 1.0});
    for (double phi : {0.3, 1.0, 2.0, 2.8}) {
        Vec v = std::cos(phi) * axis + std::sin(phi) * gamma;
        CHECK(section_radial(b, x, axis, gamma, phi) ==
              doctest::Approx(radial(b, x, v)).epsilon(1e-9));
    }
}

TEST_CASE("orthogonal_complement is orthonormal") {
    Vec a = normalized(Vec{1.0, -2.0, 0.5, 3.0});
    auto basis = orthogonal_complement(a);
    REQUIRE(basis.size() == 3);
    for (size_t i = 0; i < basis.size(); ++i) {
        CHECK(norm(basis[i]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(dot(basis[i], a)) < 1e-12);
        for (size_t j = i + 1; j < basis.size(); ++j)
            CHECK(std::abs(dot(basis[i], basis[j])) < 1e-12);
    }
}

TEST_CASE("contains and base point") {
    ConvexBody b = stadium2d(1.0, 0.5);
    CHECK(contains(b, Vec{1.4, 0.0}));
    CHECK(!contains(b, Vec{1.6, 0.0}));
    CHECK(contains(b, b.base_point));
    CHECK(dist_to_core(b, b.base_point) < 0.5);
}
