#include <doctest.h>

#include <cmath>
#include <sstream>

#include "symbidisc/action.hpp"
#include "symbidisc/flat_coords.hpp"
#include "symbidisc/royal_manifold.hpp"
#include "symbidisc/sampling.hpp"

using namespace symbidisc;

TEST_SUITE_BEGIN("flat_coords");

TEST_CASE("lift and descend") {
    const FlatChartMap xi = lift([](const GPoint& s) { return s.vec(); }, "identity");
    const Complex beta(0.3, -0.2), z(0.1, 0.4);
    CHECK((xi.sampler(beta, z) - Vec2c(beta + std::conj(beta) * z, z)).norm() < 1e-15);

    // Lift of a rotation action: (eta (beta + conj(beta) z), eta^2 z).
    const Complex eta = std::polar(1.0, 0.9);
    const FlatChartMap turned =
        lift([eta](const GPoint& s) { return gamma(rotation(eta), s).vec(); }, "eta");
    CHECK((turned.sampler(beta, z) -
           Vec2c(eta * (beta + std::conj(beta) * z), eta * eta * z)).norm() < 1e-13);

    Sampler sampler(95);
    const DomainMap poly = [](const GPoint& s) {
        return Vec2c(s.s1 + s.s2 * s.s2, s.s1 * s.s2);
    };
    const DomainMap back = descend(lift(poly));
    for (int i = 0; i < 100; ++i) {
        const GPoint s = sampler.interior_point(0.9);
        CHECK((back(s) - poly(s)).norm() < 1e-12);
    }
}

TEST_CASE("chain rule identities") {
    // F = identity: the beta-derivatives of xi1 are 1 and z respectively.
    const DomainMap identity = [](const GPoint& s) { return s.vec(); };
    const ChainRuleResiduals at = chain_rule_residuals(identity, Complex(0.2, 0.1),
                                                       Complex(-0.3, 0.2));
    CHECK(at.max() < 1e-7);

    Sampler sampler(96);
    const DomainMap poly = [](const GPoint& s) {
        return Vec2c(s.s1 * s.s1 - s.s2, 0.5 * s.s1 * s.s2 + s.s2);
    };
    for (int i = 0; i < 100; ++i) {
        const ChainRuleResiduals res =
            chain_rule_residuals(poly, sampler.disc(0.7), sampler.disc(0.7));
        CHECK(res.max() < 1e-6);
    }

    // For holomorphic F the conjugate-s derivative drops out of the
    // leaf-transport identity: d xi / d conj(beta) = z f_s.
    const double step = 1e-4;
    const Complex beta(0.25, -0.3), z(0.4, 0.1);
    const FlatChartMap xi = lift(poly);
    const auto at_beta = [&](Complex b) { return xi.sampler(b, z); };
    const Vec2c dx = (at_beta(beta + step) - at_beta(beta - step)) / (2.0 * step);
    const Vec2c dy =
        (at_beta(beta + step * kImagUnit) - at_beta(beta - step * kImagUnit)) / (2.0 * step);
    const Vec2c d_conj = 0.5 * (dx + kImagUnit * dy);
    const GPoint s = from_flat_coords({beta, z});
    const auto f_at = [&](Complex u) { return poly(GPoint{u, s.s2}); };
    const Vec2c f_s = 0.5 * ((f_at(s.s1 + step) - f_at(s.s1 - step)) / (2.0 * step) -
                             kImagUnit * (f_at(s.s1 + step * kImagUnit) -
                                          f_at(s.s1 - step * kImagUnit)) /
                                 (2.0 * step));
    CHECK((d_conj - z * f_s).norm() < 1e-6);
}

TEST_CASE("pde check passes for lifted holomorphic maps") {
    const FlatChartMap id_chart = lift([](const GPoint& s) { return s.vec(); }, "id");
    const PdeReport id_report = pde_check(id_chart, 4, 0.8, 1e-4);
    CHECK(id_report.pass);

    Sampler sampler(97);
    const DiscAutomorphism m = sampler.automorphism(0.6);
    const FlatChartMap moved =
        lift([m](const GPoint& s) { return gamma(m, s).vec(); }, "gamma");
    CHECK(pde_check(moved, 4, 0.8, 1e-4).pass);

    const ManifoldInstance bent = make_triangular_instance(0.1);
    const FlatChartMap bent_chart =
        lift([&bent](const GPoint& s) { return bent.forward(s); }, "triangular");
    CHECK(pde_check(bent_chart, 4, 0.8, 1e-4).pass);
}

TEST_CASE("pde check rejects an anti-holomorphic perturbation") {
    const FlatChartMap control{
        [](Complex beta, Complex z) {
            return Vec2c(beta + std::conj(beta) * z + 0.05 * std::conj(z), z);
        },
        "control"};
    const PdeReport report = pde_check(control, 4, 0.8, 1e-4);
    CHECK_FALSE(report.pass);
    CHECK(report.residual_z_holomorphy == doctest::Approx(0.05).epsilon(1e-6));

    CHECK_THROWS_AS((void)pde_check(control, 4, 0.9999, 1e-4), std::invalid_argument);
}

TEST_CASE("a chart passing the pde check descends to a holomorphic map") {
    CHECK(reconstruct_and_verify(lift([](const GPoint& s) { return s.vec(); })).pass);

    Sampler sampler(98);
    const DiscAutomorphism m = sampler.automorphism(0.6);
    const ReconstructionReport rec =
        reconstruct_and_verify(lift([m](const GPoint& s) { return gamma(m, s).vec(); }));
    CHECK(rec.pass);
    CHECK(rec.holomorphy < 1e-6);

    const ManifoldInstance bent = make_triangular_instance(0.1);
    CHECK(reconstruct_and_verify(lift([&bent](const GPoint& s) { return bent.forward(s); }))
              .pass);
}

TEST_CASE("complex token parsing") {
    CHECK(std::abs(parse_complex("0.5") - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(parse_complex("0.3+0.2i") - Complex(0.3, 0.2)) < 1e-15);
    CHECK(std::abs(parse_complex("-1.5e-3-2i") - Complex(-1.5e-3, -2.0)) < 1e-15);
    CHECK(std::abs(parse_complex("0.7i") - Complex(0.0, 0.7)) < 1e-15);
    const Complex value(-0.123456789012345, 3.9e-7);
    CHECK(std::abs(parse_complex(format_complex(value)) - value) < 1e-16);
}

TEST_CASE("tabulated grid files round trip through the stencil checker") {
    // Build a complete central-difference stencil table around a few base
    // points and verify both the CSV round trip and the sample checker.
    const FlatChartMap xi = lift([](const GPoint& s) { return s.vec(); }, "id");
    const double h = 1e-3;
    std::vector<GridSample> samples;
    const std::vector<std::pair<Complex, Complex>> bases = {
        {Complex(0.2, 0.1), Complex(-0.3, 0.25)},
        {Complex(-0.4, 0.2), Complex(0.1, -0.5)},
    };
    for (const auto& [beta, z] : bases) {
        const Complex offs[] = {0.0, h, -h, h * kImagUnit, -h * kImagUnit};
        for (const Complex& db : offs) samples.push_back({beta + db, z, xi.sampler(beta + db, z)});
        for (const Complex& dz : offs)
            if (dz != 0.0) samples.push_back({beta, z + dz, xi.sampler(beta, z + dz)});
    }

    std::stringstream io;
    write_grid_csv(io, samples);
    const std::vector<GridSample> loaded = read_grid_csv(io);
    REQUIRE(loaded.size() == samples.size());
    for (size_t i = 0; i < samples.size(); ++i)
        CHECK((loaded[i].xi - samples[i].xi).norm() < 1e-15);

    const PdeReport report = pde_check_samples(loaded, h);
    CHECK(report.points == 2);
    CHECK(report.pass);

    CHECK_THROWS_AS((void)pde_check_samples({loaded[0]}, h), std::runtime_error);
}

TEST_SUITE_END();
