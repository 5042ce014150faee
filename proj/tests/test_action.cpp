#include <doctest.h>

#include <cmath>

#include "symbidisc/action.hpp"
#include "symbidisc/sampling.hpp"

using namespace symbidisc;

namespace {
bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }
}

TEST_SUITE_BEGIN("action");

TEST_CASE("gamma on rotations") {
    Sampler sampler(41);
    const GPoint s = sampler.interior_point(0.8);
    CHECK((gamma(identity_automorphism(), s).vec() - s.vec()).norm() < 1e-15);

    const GPoint negated = gamma(rotation(-1.0), s);
    CHECK(close(negated.s1, -s.s1, 1e-14));
    CHECK(close(negated.s2, s.s2, 1e-14));

    // rho_eta acts diagonally as (eta s1, eta^2 s2); roots oracle at eta = i.
    const GPoint turned = gamma(rotation(kImagUnit), GPoint{0.4, 0.1});
    CHECK(close(turned.s1, Complex(0.0, 0.4), 1e-14));
    CHECK(close(turned.s2, -0.1, 1e-14));

    CHECK_THROWS_AS((void)gamma(rotation(-1.0), GPoint{3.0, 1.0}), std::domain_error);
}

TEST_CASE("evaluation formula") {
    Sampler sampler(42);
    const GPoint s = sampler.interior_point(0.8);
    CHECK((eval_formula(s, 0.0, 0.0).vec() - s.vec()).norm() < 1e-15);

    // Hand-substituted form at s = (0, p), r = 0.
    const double p = 0.45;
    const Complex alpha(0.2, -0.3);
    const Complex ca = std::conj(alpha);
    const Complex den = 1.0 + ca * ca * p;
    const GPoint got = eval_formula(GPoint{0.0, p}, 0.0, alpha);
    CHECK(close(got.s1, (-2.0 * alpha - 2.0 * ca * p) / den, 1e-14));
    CHECK(close(got.s2, (alpha * alpha + p) / den, 1e-14));

    for (int i = 0; i < 200; ++i) {
        const GPoint t = sampler.interior_point(0.85);
        const DiscAutomorphism m = sampler.automorphism(0.75);
        const Chart c = chart_of(m);
        CHECK((eval_formula(t, c.r, c.alpha).vec() - gamma(m, t).vec()).norm() < 1e-11);
    }
}

TEST_CASE("swap automorphism") {
    // At (0, p) the swap is z -> -z.
    const DiscAutomorphism ups = swap_automorphism(GPoint{0.0, 0.36});
    CHECK(automorphism_distance(ups, rotation(-1.0)) < 1e-12);

    Sampler sampler(43);
    for (int i = 0; i < 50; ++i) {
        const GPoint s = sampler.nonroyal_point(0.85, 0.05);
        const DiscAutomorphism u = swap_automorphism(s);
        CHECK((gamma(u, s).vec() - s.vec()).norm() < 1e-12);
        CHECK(is_involution(u, 1e-10));
        CHECK_FALSE(is_identity(u, 1e-6));
        const auto [z, w] = roots(s);
        CHECK(close(u.apply(z), w, 1e-12));
        CHECK(close(u.apply(w), z, 1e-12));
    }
    CHECK_THROWS_AS((void)swap_automorphism(royal(0.2)), std::domain_error);
}

TEST_CASE("stabilizer order") {
    CHECK(stabilizer_order(GPoint{0.0, 0.3}) == StabilizerOrder::Two);
    CHECK(stabilizer_order(GPoint{0.0, 0.0}) == StabilizerOrder::Infinite);
    CHECK(stabilizer_order(GPoint{1.0, 0.25}) == StabilizerOrder::Infinite);
}

TEST_CASE("fiber search finds exactly the identity and the swap") {
    const GPoint s = symmetrize(Complex(0.45, 0.15), Complex(-0.3, -0.1));
    const DiscAutomorphism ups = swap_automorphism(s);
    bool found_id = false, found_ups = false;
    for (const FiberHit& hit : fiber_search(s, 12, 0.5)) {
        const auto refined = refine_fiber_point(s, hit.m);
        if (!refined) continue;
        const double d_id = automorphism_distance(*refined, identity_automorphism());
        const double d_up = automorphism_distance(*refined, ups);
        CHECK(std::min(d_id, d_up) < 1e-7);
        found_id = found_id || d_id < 1e-7;
        found_ups = found_ups || d_up < 1e-7;
    }
    CHECK(found_id);
    CHECK(found_ups);
}

TEST_CASE("infinitesimal action") {
    const double p = 0.3;
    const GPoint axis{0.0, p};
    const Vec2c rotational = tangent_v(axis, {1.0, 0.0});
    CHECK(close(rotational(0), 0.0));
    CHECK(close(rotational(1), Complex(0.0, 2.0 * p)));

    const Complex alpha(0.4, -0.2);
    const Vec2c translational = tangent_v(axis, {0.0, alpha});
    CHECK(close(translational(0), -2.0 * alpha - 2.0 * std::conj(alpha) * p, 1e-14));
    CHECK(close(translational(1), 0.0));

    // Central-difference oracle along t -> gamma(m_{tr, t alpha}, s).
    Sampler sampler(44);
    for (int i = 0; i < 30; ++i) {
        const GPoint s = sampler.interior_point(0.8);
        const LieTangent lt{sampler.uniform(-1.0, 1.0), sampler.disc(0.9)};
        const double t = 1e-5;
        const Vec2c fd = (gamma(m_from_chart(t * lt.r, t * lt.a), s).vec() -
                          gamma(m_from_chart(-t * lt.r, -t * lt.a), s).vec()) /
                         (2.0 * t);
        CHECK((fd - tangent_v(s, lt)).norm() < 1e-8);
    }
}

TEST_CASE("orbit tangent space") {
    const OrbitTangentReport origin = orbit_tangent(GPoint{0.0, 0.0});
    CHECK(origin.rank == 2);
    CHECK(origin.subspace.contains(to_real(Vec2c(1.0, 0.0))));
    CHECK(origin.subspace.contains(to_real(Vec2c(kImagUnit, 0.0))));
    CHECK_FALSE(origin.subspace.contains(to_real(Vec2c(0.0, 1.0))));

    // Spanning vectors at (0, 1/2) from the defining formula.
    const OrbitTangentReport half = orbit_tangent(GPoint{0.0, 0.5});
    CHECK((half.spanning[0] - Vec2c(0.0, kImagUnit)).norm() < 1e-15);
    CHECK((half.spanning[1] - Vec2c(3.0, 0.0)).norm() < 1e-15);
    CHECK((half.spanning[2] - Vec2c(kImagUnit, 0.0)).norm() < 1e-15);
    CHECK(half.rank == 3);

    CHECK(orbit_tangent(GPoint{1.0, 0.25}).rank == 2);
}

TEST_CASE("action jacobian") {
    const Complex eta = std::polar(1.0, 1.3);
    const Eigen::Matrix2cd at_origin = gamma_jacobian(rotation(eta), GPoint{0.0, 0.0});
    CHECK(close(at_origin(0, 0), eta, 1e-9));
    CHECK(close(at_origin(1, 1), eta * eta, 1e-9));
    CHECK(std::abs(at_origin(0, 1)) + std::abs(at_origin(1, 0)) < 1e-9);

    Sampler sampler(45);
    const GPoint generic = sampler.nonroyal_point(0.8, 0.1);
    CHECK((gamma_jacobian(identity_automorphism(), generic) -
           Eigen::Matrix2cd::Identity()).norm() < 1e-13);

    // gamma_{B_{-alpha}}'(0,0) = (1-|alpha|^2) [[1, 2 conj(alpha)], [alpha, 1+|alpha|^2]].
    const Complex alpha(0.3, -0.25);
    Eigen::Matrix2cd expected;
    expected << 1.0, 2.0 * std::conj(alpha), alpha, 1.0 + std::norm(alpha);
    expected *= 1.0 - std::norm(alpha);
    CHECK((gamma_jacobian(blaschke(-alpha), GPoint{0.0, 0.0}) - expected).norm() < 1e-9);
}

TEST_CASE("jacobian regimes agree near a root collision") {
    Sampler sampler(46);
    for (int i = 0; i < 20; ++i) {
        const Complex zeta = sampler.disc(0.6);
        const Complex gap = 5e-4 * sampler.unit_circle();
        // |z - w| = 1e-3: analytic route, compared against the difference
        // oracle.
        const GPoint near = symmetrize(zeta + gap, zeta - gap);
        const DiscAutomorphism m = sampler.automorphism(0.6);
        const auto fd = numeric_jacobian(
            [&m](const Vec2c& v) { return gamma(m, GPoint::from(v)).vec(); }, near.vec(),
            1e-5);
        REQUIRE(fd.complex_form.has_value());
        CHECK((gamma_jacobian(m, near) - *fd.complex_form).norm() < 1e-6);
    }

    // Inside the fallback band (|z - w| < 1e-4) the finite-difference route
    // must still match the implicit-differentiation formula, here evaluated
    // directly as the oracle.
    for (int i = 0; i < 20; ++i) {
        const Complex zeta = sampler.disc(0.6);
        const Complex gap = 2e-5 * sampler.unit_circle();
        const Complex z = zeta + gap, w = zeta - gap;
        const GPoint near = symmetrize(z, w);
        const DiscAutomorphism m = sampler.automorphism(0.6);
        const Complex dz = derivative(m, z), dw = derivative(m, w);
        const Complex mz = m.apply(z), mw = m.apply(w);
        Eigen::Matrix2cd oracle;
        oracle(0, 0) = (dz * z - dw * w) / (z - w);
        oracle(0, 1) = -(dz - dw) / (z - w);
        oracle(1, 0) = (dz * mw * z - mz * dw * w) / (z - w);
        oracle(1, 1) = -(dz * mw - mz * dw) / (z - w);
        CHECK((gamma_jacobian(m, near) - oracle).norm() < 1e-6);
    }
}

TEST_CASE("evaluation derivative matrix and its pseudo-inverse") {
    // Columns at (0, 1/2) from the tangent formula.
    const Eigen::Matrix<double, 4, 3> e = es_prime(GPoint{0.0, 0.5});
    CHECK((e.col(0) - Vec4(0.0, 0.0, 0.0, 1.0)).norm() < 1e-15);
    CHECK((e.col(1) - Vec4(-3.0, 0.0, 0.0, 0.0)).norm() < 1e-15);
    CHECK((e.col(2) - Vec4(0.0, -1.0, 0.0, 0.0)).norm() < 1e-15);

    Sampler sampler(47);
    for (int i = 0; i < 40; ++i) {
        const GPoint s = sampler.nonroyal_point(0.85, 0.05);
        const auto pinv = es_prime_pinv(s);
        CHECK((pinv * es_prime(s) - Eigen::Matrix3d::Identity()).norm() < 1e-10);
    }
    CHECK_THROWS_AS((void)es_prime_pinv(royal(0.3)), std::domain_error);
}

TEST_CASE("homomorphism, equivariance, and leaf transport") {
    Sampler sampler(48);
    for (int i = 0; i < 100; ++i) {
        const DiscAutomorphism m1 = sampler.automorphism(0.75);
        const DiscAutomorphism m2 = sampler.automorphism(0.75);
        const GPoint s = sampler.interior_point(0.85);
        CHECK((gamma(compose(m1, m2), s).vec() - gamma(m1, gamma(m2, s)).vec()).norm() <
              1e-11);

        const Complex z = sampler.disc(0.85);
        CHECK((gamma(m1, royal(z)).vec() - royal(m1.apply(z)).vec()).norm() < 1e-12);
        CHECK(is_royal(gamma(m1, royal(z)), 1e-11));

        // The image leaf depends only on (m, leaf): transport the royal
        // anchor of the leaf and compare labels.
        const FlatLeaf leaf = leaf_of(s);
        const GPoint anchor = royal_intersection(leaf).point;
        CHECK(std::abs(leaf_of(gamma(m1, s)).beta -
                       leaf_of(gamma(m1, anchor)).beta) < 1e-10);
    }
}

TEST_SUITE_END();
