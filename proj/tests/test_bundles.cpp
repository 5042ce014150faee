#include <doctest.h>

#include <cmath>

#include "symbidisc/bundles.hpp"
#include "symbidisc/sampling.hpp"

using namespace symbidisc;

TEST_SUITE_BEGIN("bundles");

TEST_CASE("sharp direction on the central leaf and the royal variety") {
    const ComplexLine first_axis = complex_line(Vec2c(1.0, 0.0));
    for (const double p : {0.1, 0.4, 0.8}) {
        CHECK(projective_distance(sharp_closed(GPoint{0.0, p}), first_axis) < 1e-12);
        CHECK(projective_distance(sharp_numeric(GPoint{0.0, p}), first_axis) < 1e-12);
    }
    // At the royal origin the orbit tangent is already the complex line C x {0}.
    CHECK(projective_distance(sharp_numeric(GPoint{0.0, 0.0}), first_axis) < 1e-12);

    // On the royal variety the sharp line is the royal tangent C(1, zeta);
    // the closed form simplifies to exactly that (algebraic oracle).
    Sampler sampler(51);
    for (int i = 0; i < 25; ++i) {
        const Complex zeta = sampler.disc(0.85);
        const ComplexLine tangent = complex_line(Vec2c(1.0, zeta));
        CHECK(projective_distance(sharp_closed(royal(zeta)), tangent) < 1e-12);
        CHECK(projective_distance(sharp_numeric(royal(zeta)), tangent) < 1e-8);
    }
}

TEST_CASE("closed form matches the numeric intersection") {
    Sampler sampler(52);
    for (int i = 0; i < 200; ++i) {
        const GPoint s = sampler.interior_point(0.88);
        CHECK(projective_distance(sharp_closed(s), sharp_numeric(s)) < 1e-8);
    }
}

TEST_CASE("flat direction") {
    CHECK(projective_distance(flat_direction(GPoint{0.0, 0.3}),
                              complex_line(Vec2c(0.0, 1.0))) < 1e-13);
    const GPoint on_leaf = leaf_point(FlatLeaf{0.5}, Complex(0.2, 0.1));
    CHECK(projective_distance(flat_direction(on_leaf), complex_line(Vec2c(0.5, 1.0))) <
          1e-13);

    // Finite-difference oracle: tangent of z -> leaf_point(leaf, z).
    Sampler sampler(53);
    for (int i = 0; i < 30; ++i) {
        const GPoint s = sampler.interior_point(0.85);
        const FlatLeaf leaf = leaf_of(s);
        const double h = 1e-6;
        const Vec2c fd =
            (leaf_point(leaf, s.s2 + h).vec() - leaf_point(leaf, s.s2 - h).vec()) /
            (2.0 * h);
        CHECK(projective_distance(complex_line(fd), flat_direction(s)) < 1e-9);
    }
}

TEST_CASE("covariance under the action") {
    Sampler sampler(54);
    const GPoint s = sampler.interior_point(0.8);
    CHECK(covariance_residual(identity_automorphism(), s) < 1e-13);
    CHECK(covariance_residual(rotation(std::polar(1.0, 0.9)), s) < 1e-9);
    for (int i = 0; i < 100; ++i) {
        const DiscAutomorphism m = sampler.automorphism(0.75);
        const GPoint t = sampler.interior_point(0.8);
        CHECK(covariance_residual(m, t) < 1e-7);
        CHECK(flat_covariance_residual(m, t) < 1e-7);
    }
}

TEST_CASE("sharp and flat directions span the tangent space") {
    CHECK(direct_sum_check(GPoint{0.0, 0.4}) == doctest::Approx(1.0));
    CHECK(direct_sum_check(GPoint{0.0, 0.0}) == doctest::Approx(1.0));
    Sampler sampler(55);
    double lowest = 1.0;
    for (int i = 0; i < 1000; ++i)
        lowest = std::min(lowest, direct_sum_check(sampler.interior_point(0.85)));
    CHECK(lowest > 1e-6);
}

TEST_SUITE_END();
