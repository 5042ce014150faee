#include "symbidisc/lambda_builder.hpp"

#include <cmath>
#include <stdexcept>

#include "symbidisc/bundles.hpp"
#include "symbidisc/sampling.hpp"

namespace symbidisc {

Complex alpha_of(const GPoint& s) {
    const Complex beta = leaf_of(s).beta;
    return -beta / (1.0 + std::sqrt(1.0 - std::norm(beta)));
}

GPoint L_of(const GPoint& s) {
    if (!is_interior(s)) throw std::domain_error("L_of: point not interior to G");
    const Complex a = alpha_of(s);
    const Complex ca = std::conj(a);
    const Complex z = (s.s2 + a * s.s1 + a * a) / (1.0 + ca * s.s1 + ca * ca * s.s2);
    return {Complex(0.0), z};
}

LambdaMap build_lambda(const ManifoldInstance& instance, const ConcomitantPair& pair,
                       const std::function<Point2(Complex)>& f) {
    // f must parametrize the fiber over d(0) and anchor the base point.
    if ((f(0.0) - pair.d(0.0)).norm() > 1e-9)
        throw std::invalid_argument("build_lambda: f(0) must equal d(0)");
    for (const Complex z : {Complex(0.4, 0.1), Complex(-0.3, 0.5), Complex(0.0, -0.7)}) {
        const GPoint pulled = instance.inverse(f(z));
        if (std::abs(leaf_of(pulled).beta) > 1e-8)
            throw std::invalid_argument(
                "build_lambda: f does not parametrize the central fiber");
    }
    return [pair, f](const GPoint& s) {
        const Complex z = L_of(s).s2;
        return pair.theta(blaschke(alpha_of(s)))(f(z));
    };
}

LambdaReport verify_lambda(const LambdaMap& lambda, const ManifoldInstance& instance,
                           const ConcomitantPair& pair, unsigned seed, int samples,
                           double fd_step) {
    LambdaReport report;
    Sampler sampler(seed);
    const MapC2 as_map = [&lambda](const Vec2c& v) { return lambda(GPoint::from(v)); };

    std::vector<GPoint> generic, near_royal;
    for (int i = 0; i < samples; ++i) {
        const GPoint s = sampler.interior_point(0.8);
        if (std::abs(s.s1 * s.s1 - 4.0 * s.s2) > 5e-2)
            generic.push_back(s);
    }
    for (int i = 0; i < samples / 4; ++i) {
        const Complex zeta = sampler.royal_zeta(0.7);
        const Complex nudge = 1e-3 * sampler.unit_circle();
        near_royal.push_back(symmetrize(zeta + nudge, zeta - nudge));
    }

    for (const GPoint& s : generic)
        report.holomorphy =
            std::max(report.holomorphy, holomorphy_residual(as_map, s.vec(), fd_step));
    for (const GPoint& s : near_royal)
        report.holomorphy_near_royal = std::max(
            report.holomorphy_near_royal, holomorphy_residual(as_map, s.vec(), fd_step));

    // Injectivity sampling: distinct flat coordinates must not collide.
    std::vector<std::pair<FlatCoordinates, Point2>> images;
    for (const GPoint& s : generic) images.push_back({flat_coords(s), lambda(s)});
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            const double coord_gap =
                std::abs(images[i].first.beta - images[j].first.beta) +
                std::abs(images[i].first.z - images[j].first.z);
            const double image_gap = (images[i].second - images[j].second).norm();
            if (coord_gap > 1e-3 && image_gap < 1e-10) report.injectivity_defect = 1.0;
        }

    for (int i = 0; i < 40; ++i) {
        const DiscAutomorphism u = sampler.automorphism(0.7);
        const GPoint s = sampler.interior_point(0.75);
        const Point2 via_g = lambda(gamma(u, s));
        const Point2 via_omega = pair.theta(u)(lambda(s));
        report.equivariance = std::max(report.equivariance, (via_g - via_omega).norm());
    }

    for (int i = 0; i < 40; ++i) {
        const Complex z = sampler.royal_zeta(0.8);
        report.royal_mapping =
            std::max(report.royal_mapping, (lambda(royal(z)) - pair.d(z)).norm());
    }

    for (int i = 0; i < 40; ++i) {
        const Complex z = sampler.royal_zeta(0.7);
        const FlatLeaf leaf = leaf_of(royal(z));
        const GPoint on_leaf = leaf_point(leaf, sampler.disc(0.85));
        const Complex expected = leaf_of(instance.inverse(instance.forward(royal(z)))).beta;
        const Complex got = leaf_of(instance.inverse(lambda(on_leaf))).beta;
        report.leaf_mapping = std::max(report.leaf_mapping, std::abs(got - expected));
    }

    // Tangent transport: Lambda'(s) carries the sharp and flat lines of s to
    // the corresponding lines at Lambda(s), computed on the image side by
    // pushing forward with the instance map.
    const MapC2 fwd = [&instance](const Vec2c& v) {
        return instance.forward(GPoint::from(v));
    };
    for (const GPoint& s : generic) {
        if (report.sharp_transport > 1.0) break;
        const auto jl = numeric_jacobian(as_map, s.vec(), fd_step);
        if (!jl.complex_form) {
            report.sharp_transport = 2.0;
            break;
        }
        const GPoint pre = instance.inverse(lambda(s));
        const auto ji = numeric_jacobian(fwd, pre.vec(), fd_step);
        if (!ji.complex_form) {
            report.sharp_transport = 2.0;
            break;
        }
        const ComplexLine sharp_image =
            complex_line(*ji.complex_form * sharp_closed(pre).direction);
        const ComplexLine flat_image =
            complex_line(*ji.complex_form * flat_direction(pre).direction);
        report.sharp_transport = std::max(
            report.sharp_transport,
            projective_distance(complex_line(*jl.complex_form * sharp_closed(s).direction),
                                sharp_image));
        report.flat_transport = std::max(
            report.flat_transport,
            projective_distance(complex_line(*jl.complex_form * flat_direction(s).direction),
                                flat_image));
    }

    report.pass = report.holomorphy < 1e-5 && report.injectivity_defect == 0.0 &&
                  report.equivariance < 1e-9 && report.royal_mapping < 1e-9 &&
                  report.leaf_mapping < 1e-9 && report.sharp_transport < 1e-6 &&
                  report.flat_transport < 1e-6;
    return report;
}

double reconstruction_deviation(const LambdaMap& lambda,
                                const std::function<Point2(const GPoint&)>& reference,
                                unsigned seed, int samples) {
    Sampler sampler(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const GPoint s = sampler.interior_point(0.85);
        worst = std::max(worst, (lambda(s) - reference(s)).norm());
    }
    return worst;
}

}  // namespace symbidisc
