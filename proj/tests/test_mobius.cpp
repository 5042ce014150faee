#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symbidisc/mobius.hpp"
#include "symbidisc/sampling.hpp"

using namespace symbidisc;

namespace {
bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }
}

TEST_SUITE_BEGIN("mobius");

TEST_CASE("apply") {
    CHECK(close(identity_automorphism().apply(Complex(0.0, 0.3)), Complex(0.0, 0.3)));
    CHECK(close(blaschke(0.5).apply(0.5), 0.0));

    // Direct-formula oracle for m_{r,alpha}.
    const double r = std::numbers::pi / 3.0;
    const Complex alpha(0.2, 0.1);
    const Complex z = 0.4;
    const Complex expected =
        std::polar(1.0, r) * (z - alpha) / (1.0 - std::conj(alpha) * z);
    CHECK(close(m_from_chart(r, alpha).apply(z), expected, 1e-15));

    CHECK_THROWS_AS((void)blaschke(0.2).apply(Complex(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("compose and inverse") {
    Sampler sampler(5);
    const DiscAutomorphism m = sampler.automorphism();
    CHECK(automorphism_distance(compose(identity_automorphism(), m), m) < 1e-15);

    // inverse(B_alpha) = B_{-alpha}, checked pointwise on a grid.
    const Complex alpha(0.35, -0.2);
    const DiscAutomorphism inv = inverse(blaschke(alpha));
    CHECK(automorphism_distance(inv, blaschke(-alpha)) < 1e-15);
    for (int k = 0; k < 12; ++k) {
        const Complex z = std::polar(0.8 * (k + 1) / 13.0, 0.9 * k);
        CHECK(close(blaschke(-alpha).apply(blaschke(alpha).apply(z)), z, 1e-14));
    }

    const Complex eta1 = std::polar(1.0, 0.7), eta2 = std::polar(1.0, -1.9);
    CHECK(automorphism_distance(compose(rotation(eta1), rotation(eta2)),
                                rotation(eta1 * eta2)) < 1e-15);

    for (int i = 0; i < 50; ++i) {
        const DiscAutomorphism a = sampler.automorphism();
        CHECK(is_identity(compose(a, inverse(a)), 1e-13));
    }
}

TEST_CASE("atlas charts") {
    const Chart at_identity = chart_of(identity_automorphism());
    CHECK(at_identity.id == ChartId::U1);
    CHECK(at_identity.r == doctest::Approx(0.0));
    CHECK(close(at_identity.alpha, 0.0));

    const Chart half_turn = chart_of(rotation(-1.0));
    CHECK(half_turn.id == ChartId::U2);
    CHECK(half_turn.r == doctest::Approx(std::numbers::pi));

    Sampler sampler(6);
    for (int i = 0; i < 100; ++i) {
        const DiscAutomorphism m = sampler.automorphism(0.9);
        const Chart c = chart_of(m);
        CHECK(automorphism_distance(m_from_chart(c.id, c.r, c.alpha), m) < 1e-14);
    }

    // Transition map on the overlap shifts r by 2 pi.
    const DiscAutomorphism overlap = m_from_chart(-1.2, Complex(0.1, 0.2));
    const DiscAutomorphism same = m_from_chart(ChartId::U2, -1.2 + 2.0 * std::numbers::pi,
                                               Complex(0.1, 0.2));
    CHECK(automorphism_distance(overlap, same) < 1e-14);

    CHECK_THROWS_AS(m_from_chart(ChartId::U1, std::numbers::pi, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(m_from_chart(ChartId::U2, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(m_from_chart(ChartId::U2, 2.0 * std::numbers::pi, 0.0),
                    std::invalid_argument);
}

TEST_CASE("pseudohyperbolic and poincare distances") {
    for (const double p : {0.1, 0.5, 0.9}) {
        CHECK(pseudohyperbolic(0.0, p) == doctest::Approx(p));
        CHECK(poincare(0.0, p) == doctest::Approx(std::atanh(p)));
    }
    CHECK(pseudohyperbolic(Complex(0.3, -0.2), Complex(0.3, -0.2)) == doctest::Approx(0.0));

    Sampler sampler(7);
    for (int i = 0; i < 100; ++i) {
        const DiscAutomorphism m = sampler.automorphism();
        const Complex z1 = sampler.disc(0.9), z2 = sampler.disc(0.9);
        CHECK(std::abs(pseudohyperbolic(m.apply(z1), m.apply(z2)) -
                       pseudohyperbolic(z1, z2)) < 1e-12);
    }
}

TEST_CASE("conjugate rotation fixes its point with the prescribed multiplier") {
    const Complex eta(0.0, 1.0);
    CHECK(automorphism_distance(conjugate_rotation(0.0, eta), rotation(eta)) < 1e-15);
    CHECK(is_identity(conjugate_rotation(Complex(0.3, 0.2), 1.0), 1e-14));

    const Complex fix = 0.4;
    const DiscAutomorphism m = conjugate_rotation(fix, eta);
    CHECK(close(m.apply(fix), fix, 1e-14));
    // Finite-difference multiplier oracle.
    const double h = 1e-6;
    const Complex fd = (m.apply(fix + h) - m.apply(fix - h)) / (2.0 * h);
    CHECK(close(fd, eta, 1e-8));
    CHECK(close(derivative(m, fix), eta, 1e-14));
}

TEST_CASE("involutions and fixed points") {
    const DiscAutomorphism negate = rotation(-1.0);
    CHECK(is_involution(negate));
    const MobiusFixedPoints fixed = fixed_points(negate);
    CHECK_FALSE(fixed.whole_disc);
    REQUIRE(fixed.points.size() == 1);
    CHECK(close(fixed.points[0], 0.0));

    // B_alpha is not an involution for alpha != 0: compose oracle.
    const DiscAutomorphism twice = compose(blaschke(0.5), blaschke(0.5));
    CHECK_FALSE(is_identity(twice, 1e-9));
    CHECK_FALSE(is_involution(blaschke(0.5)));

    CHECK(fixed_points(identity_automorphism()).whole_disc);

    // Hyperbolic case: B_alpha fixes two boundary points.
    const MobiusFixedPoints boundary = fixed_points(blaschke(Complex(0.3, 0.4)));
    REQUIRE(boundary.points.size() == 2);
    for (const Complex& z : boundary.points) CHECK(std::abs(z) == doctest::Approx(1.0));
}

TEST_CASE("inner automorphisms") {
    Sampler sampler(8);
    const DiscAutomorphism m = sampler.automorphism();
    CHECK(automorphism_distance(inner_automorphism(identity_automorphism(), m), m) < 1e-15);
    CHECK(is_identity(inner_automorphism(m, identity_automorphism()), 1e-13));

    // I_{B_alpha}(rho_eta) fixes B_alpha(0) = -alpha (apply oracle).
    const Complex alpha(0.25, -0.15);
    const DiscAutomorphism conj =
        inner_automorphism(blaschke(alpha), rotation(std::polar(1.0, 1.1)));
    CHECK(close(conj.apply(-alpha), -alpha, 1e-14));

    // Homomorphism in m for fixed b.
    const DiscAutomorphism b = sampler.automorphism();
    const DiscAutomorphism m2 = sampler.automorphism();
    CHECK(automorphism_distance(inner_automorphism(b, compose(m, m2)),
                                compose(inner_automorphism(b, m),
                                        inner_automorphism(b, m2))) < 1e-13);
}

TEST_CASE("rotations exhaust the stabilizer of the origin") {
    Sampler sampler(9);
    for (int i = 0; i < 30; ++i) {
        const Complex eta = sampler.unit_circle();
        const DiscAutomorphism m = rotation(eta);
        // Anything fixing 0 with multiplier eta is conjugate_rotation(0, eta).
        CHECK(automorphism_distance(m, conjugate_rotation(0.0, eta)) < 1e-14);
        CHECK(close(m.apply(0.0), 0.0));
    }
}

TEST_CASE("group associativity on a grid") {
    Sampler sampler(10);
    for (int i = 0; i < 50; ++i) {
        const DiscAutomorphism a = sampler.automorphism();
        const DiscAutomorphism b = sampler.automorphism();
        const DiscAutomorphism c = sampler.automorphism();
        const Complex z = sampler.disc(0.9);
        CHECK(close(compose(compose(a, b), c).apply(z), compose(a, compose(b, c)).apply(z),
                    1e-12));
        CHECK(close(compose(a, b).apply(z), a.apply(b.apply(z)), 1e-13));
    }
}

TEST_SUITE_END();
