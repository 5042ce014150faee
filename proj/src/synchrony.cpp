#include "symbidisc/synchrony.hpp"

#include <cmath>
#include <stdexcept>

#include "symbidisc/bundles.hpp"

namespace symbidisc {

namespace {

// Eigenvalue estimate along a known eigenvector, with the defect norm.
std::pair<Complex, double> eigen_along(const Eigen::Matrix2cd& j, const Vec2c& v) {
    const Vec2c jv = j * v;
    const int pivot = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
    const Complex lambda = jv(pivot) / v(pivot);
    return {lambda, (jv - lambda * v).norm() / v.norm()};
}

}  // namespace

SynchronyReport royal_eigencheck(Complex alpha_fix, Complex eta) {
    const DiscAutomorphism m = conjugate_rotation(alpha_fix, eta);
    const GPoint s0 = royal(alpha_fix);
    // Small step: the royal point forces the finite-difference path, and the
    // eigenvalue tolerance is tighter than the default truncation budget.
    const Eigen::Matrix2cd j = gamma_jacobian(m, s0, 3e-6);
    const Vec2c royal_vec(1.0, alpha_fix);
    const Vec2c flat_vec(2.0 * std::conj(alpha_fix), 1.0 + std::norm(alpha_fix));
    SynchronyReport report;
    report.eta = eta;
    std::tie(report.royal_eigenvalue, report.residual_royal) = eigen_along(j, royal_vec);
    std::tie(report.flat_eigenvalue, report.residual_flat) = eigen_along(j, flat_vec);
    return report;
}

double leaf_double_speed_residual(Complex alpha_fix, Complex eta,
                                  std::span<const Complex> grid) {
    const DiscAutomorphism m = conjugate_rotation(alpha_fix, eta);
    const auto g = canonical_leaf_embedding(make_identity_instance(), alpha_fix);
    double worst = 0.0;
    for (const Complex& zeta : grid) {
        const Complex twice = m.apply(m.apply(zeta));
        const GPoint moved = gamma(m, GPoint::from(g(zeta)));
        worst = std::max(worst, (moved.vec() - g(twice)).norm());
    }
    return worst;
}

Vec2c sharp_action_residual(const ManifoldInstance& instance, const Point2& mu,
                            double t) {
    const GPoint s = instance.inverse(mu);
    if (is_royal(s))
        throw std::domain_error("sharp_action_residual: mu lies on the royal disc");
    const double c = manifold_C(instance, mu);
    const double growth = (1.0 + c) / (1.0 - c);  // e^{2P}
    auto theta_at = [&](Complex alpha) {
        return instance.forward(gamma(blaschke(alpha), s));
    };
    const Vec2c du_i = theta_at(Complex(0.0, t)) - mu;
    const Vec2c du_1 = theta_at(Complex(t, 0.0)) - mu;
    return growth * du_i - kImagUnit * du_1;
}

SharpnessReport sharp_action_order(const ManifoldInstance& instance, const Point2& mu,
                                   std::span<const double> t_values) {
    if (t_values.size() < 3)
        throw std::invalid_argument("sharp_action_order: need at least 3 step sizes");
    SharpnessReport report;
    for (size_t k = 0; k < t_values.size(); ++k) {
        if (k > 0 && t_values[k] >= t_values[k - 1])
            throw std::invalid_argument("sharp_action_order: t must decrease strictly");
        report.t_values.push_back(t_values[k]);
        report.residual_norms.push_back(
            sharp_action_residual(instance, mu, t_values[k]).norm());
    }
    // Least-squares slope of log-residual against log-t, skipping entries at
    // the numerical noise floor.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (size_t k = 0; k < report.t_values.size(); ++k) {
        if (report.residual_norms[k] < 1e-15) continue;
        const double x = std::log(report.t_values[k]);
        const double y = std::log(report.residual_norms[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    report.fitted_slope =
        count >= 2 ? (count * sxy - sx * sy) / (count * sxx - sx * sx) : 10.0;
    return report;
}

bool sharpness_accepted(const SharpnessReport& report, double slope_min,
                        double noise_floor) {
    double worst = 0.0;
    for (const double r : report.residual_norms) worst = std::max(worst, r);
    if (worst < noise_floor) return true;
    return report.fitted_slope >= slope_min;
}

TransportReport transported_linearity_check(const ManifoldInstance& instance,
                                            const GPoint& s, const Point2& mu,
                                            double fd_step) {
    const double cs = pseudo_param(s);
    const double cmu = manifold_C(instance, mu);
    if (std::abs(cs - cmu) > 1e-8)
        throw std::invalid_argument(
            "transported_linearity_check: C(s) and C(mu) must agree");
    const ConcomitantPair pair = consistent_pair(instance);
    const Eigen::Matrix<double, 4, 3> e_mu = evaluation_derivative(pair, mu, fd_step);
    const Eigen::Matrix4d x = e_mu * es_prime_pinv(s);

    const Vec4 v = to_real(sharp_closed(s).direction);
    const Vec4 xv = x * v;
    const Vec4 xiv = x * times_i(v);
    TransportReport report;
    report.clin_residual = (xiv - times_i(xv)).norm() / xv.norm();

    const RealSubspace orbit_mu = real_span_r4(e_mu);
    const RealSubspace sharp_mu = intersect(orbit_mu, multiply_i(orbit_mu));
    if (sharp_mu.dim() != 2)
        throw std::domain_error("transported_linearity_check: degenerate mu-sharp");
    const ComplexLine mu_line = complex_line(to_complex(sharp_mu.basis.col(0)));
    report.membership_residual =
        projective_distance(complex_line(to_complex(xv)), mu_line);
    report.pass = report.clin_residual < 1e-6 && report.membership_residual < 1e-6;
    return report;
}

}  // namespace symbidisc
