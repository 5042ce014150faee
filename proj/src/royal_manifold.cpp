#include "symbidisc/royal_manifold.hpp"

#include <cmath>
#include <stdexcept>

namespace symbidisc {

namespace {

GPoint sample_point(int i, int n) {
    // Deterministic interior sample ladder, used for instance validation.
    const double t = static_cast<double>(i + 1) / (n + 1);
    const Complex z = std::polar(0.8 * t, 2.4 * i);
    const Complex w = std::polar(0.7 * (1.0 - 0.5 * t), 1.1 * i + 0.7);
    return symmetrize(z, w);
}

}  // namespace

ManifoldInstance make_identity_instance() {
    ManifoldInstance out;
    out.forward = [](const GPoint& s) { return s.vec(); };
    out.inverse = [](const Point2& mu) { return GPoint::from(mu); };
    out.label = "identity";
    return out;
}

ManifoldInstance make_linear_instance(const Eigen::Matrix2cd& a) {
    if (std::abs(a.determinant()) < 1e-12)
        throw std::invalid_argument("make_linear_instance: matrix is singular");
    const Eigen::Matrix2cd inv = a.inverse();
    ManifoldInstance out;
    out.forward = [a](const GPoint& s) -> Point2 { return a * s.vec(); };
    out.inverse = [inv](const Point2& mu) { return GPoint::from(inv * mu); };
    out.label = "linear";
    return out;
}

ManifoldInstance make_triangular_instance(Complex eps) {
    ManifoldInstance out;
    out.forward = [eps](const GPoint& s) -> Point2 {
        return Point2(s.s1, s.s2 + eps * s.s1 * s.s1);
    };
    out.inverse = [eps](const Point2& mu) {
        return GPoint{mu(0), mu(1) - eps * mu(0) * mu(0)};
    };
    out.label = "triangular";
    return out;
}

void validate_instance(const ManifoldInstance& instance, int samples, double tol) {
    for (int i = 0; i < samples; ++i) {
        const GPoint s = sample_point(i, samples);
        const GPoint back = instance.inverse(instance.forward(s));
        if ((back.vec() - s.vec()).norm() > tol)
            throw std::domain_error("validate_instance: inverse round trip failed");
        const double hol = holomorphy_residual(
            [&instance](const Vec2c& v) { return instance.forward(GPoint::from(v)); },
            s.vec(), 1e-5);
        if (hol > 1e-6)
            throw std::domain_error("validate_instance: forward map is not holomorphic");
    }
}

ConcomitantPair consistent_pair(const ManifoldInstance& instance) {
    ConcomitantPair pair;
    pair.d = [instance](Complex z) { return instance.forward(royal(z)); };
    pair.theta = [instance](const DiscAutomorphism& m) {
        return [instance, m](const Point2& mu) {
            return instance.forward(gamma(m, instance.inverse(mu)));
        };
    };
    return pair;
}

ConcomitantPair reparametrized_pair(const ConcomitantPair& pair,
                                    const DiscAutomorphism& b) {
    ConcomitantPair out;
    out.d = [pair, b](Complex z) { return pair.d(b.apply(z)); };
    out.theta = [pair, b](const DiscAutomorphism& m) {
        return pair.theta(inner_automorphism(b, m));
    };
    return out;
}

double AxiomReport::max_residual() const {
    double worst = 0.0;
    for (const auto& [name, value] : residuals) worst = std::max(worst, value);
    return worst;
}

AxiomReport verify_royal_axioms(const ManifoldInstance& instance,
                                const ConcomitantPair& pair,
                                const std::vector<DiscAutomorphism>& sample_m,
                                const std::vector<Complex>& sample_z) {
    AxiomReport report;
    double invariance = 0.0, determinism = 0.0, extension = 0.0;
    for (const DiscAutomorphism& m : sample_m) {
        const auto theta_m = pair.theta(m);
        for (const Complex& z : sample_z) {
            const Point2 on_d = pair.d(z);
            // (1) Theta(m) keeps the royal disc invariant.
            const GPoint pulled = instance.inverse(theta_m(on_d));
            invariance = std::max(
                invariance, std::abs(pulled.s1 * pulled.s1 - 4.0 * pulled.s2));
            // (2) Determination by values on D, exercised as a consistency
            // smoke check at off-D probes (holds by construction here).
            const Point2 probe = instance.forward(leaf_point(FlatLeaf{0.3 * z}, 0.5 * z));
            determinism =
                std::max(determinism, (theta_m(probe) - pair.theta(m)(probe)).norm());
            // (3) Every disc automorphism extends: Theta(m) o d = d o m.
            extension = std::max(extension, (theta_m(on_d) - pair.d(m.apply(z))).norm());
        }
    }
    report.residuals = {{"royal_invariance", invariance},
                        {"determined_on_d_smoke", determinism},
                        {"automorphism_extension", extension}};
    return report;
}

AxiomReport verify_flat_fibration(const ManifoldInstance& instance,
                                  const std::vector<DiscAutomorphism>& sample_m,
                                  const std::vector<Complex>& royal_z,
                                  const std::vector<Complex>& leaf_z) {
    AxiomReport report;
    const ConcomitantPair pair = consistent_pair(instance);
    double meet = 0.0, partition = 0.0, covariance = 0.0;
    for (const Complex& zr : royal_z) {
        const GPoint anchor = royal(zr);
        const FlatLeaf leaf = leaf_of(anchor);
        // E_lambda cap D = {lambda}: the unique royal point of the leaf is
        // the anchor itself.
        const RoyalIntersection ri = royal_intersection(leaf);
        meet = std::max(meet, (ri.point.vec() - anchor.vec()).norm());
        for (const Complex& zl : leaf_z) {
            const GPoint on_leaf = leaf_point(leaf, zl);
            const Point2 mu = instance.forward(on_leaf);
            // Partition: the pullback leaf label is constant along the leaf.
            partition = std::max(
                partition, std::abs(leaf_of(instance.inverse(mu)).beta - leaf.beta));
            for (const DiscAutomorphism& m : sample_m) {
                const auto theta_m = pair.theta(m);
                const Complex beta_moved =
                    leaf_of(instance.inverse(theta_m(mu))).beta;
                const Complex beta_anchor =
                    leaf_of(instance.inverse(theta_m(instance.forward(anchor)))).beta;
                covariance = std::max(covariance, std::abs(beta_moved - beta_anchor));
            }
        }
    }
    report.residuals = {{"royal_meeting_point", meet},
                        {"leaf_partition", partition},
                        {"leaf_covariance", covariance}};
    return report;
}

Eigen::Matrix<double, 4, 3> evaluation_derivative(const ConcomitantPair& pair,
                                                  const Point2& mu, double step) {
    auto eval = [&](double r, Complex alpha) -> Vec4 {
        return to_real(pair.theta(m_from_chart(r, alpha))(mu));
    };
    Eigen::Matrix<double, 4, 3> e;
    e.col(0) = (eval(step, 0.0) - eval(-step, 0.0)) / (2.0 * step);
    e.col(1) = (eval(0.0, step) - eval(0.0, -step)) / (2.0 * step);
    e.col(2) = (eval(0.0, step * kImagUnit) - eval(0.0, -step * kImagUnit)) / (2.0 * step);
    return e;
}

namespace {

int matrix_rank(const Eigen::Matrix<double, 4, 3>& m, double rank_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * sv(0)) ++rank;
    return rank;
}

}  // namespace

AxiomReport verify_regularity(const ManifoldInstance& instance,
                              const ConcomitantPair& pair,
                              const std::vector<Point2>& samples_off_d,
                              double rank_tol) {
    AxiomReport report;
    double rank_defect = 0.0, stabilizer_defect = 0.0;
    for (const Point2& mu : samples_off_d) {
        const int rank = matrix_rank(evaluation_derivative(pair, mu), rank_tol);
        rank_defect = std::max(rank_defect, static_cast<double>(std::abs(rank - 3)));
        const GPoint pulled = instance.inverse(mu);
        if (stabilizer_order(pulled) != StabilizerOrder::Two) stabilizer_defect = 1.0;
    }
    report.residuals = {{"evaluation_rank_is_3", rank_defect},
                        {"stabilizer_order_is_2", stabilizer_defect}};
    return report;
}

RoyalTangentReport royal_tangent_surjectivity(const ManifoldInstance& instance,
                                              const ConcomitantPair& pair,
                                              Complex z_on_d, double rank_tol) {
    (void)instance;
    RoyalTangentReport out;
    const Point2 lambda = pair.d(z_on_d);
    const Eigen::Matrix<double, 4, 3> e = evaluation_derivative(pair, lambda);
    out.rank = matrix_rank(e, rank_tol);
    const RealSubspace range = real_span_r4(e, rank_tol);
    // Complex tangent line of the royal disc at lambda, by differentiating d.
    const double h = 1e-5;
    const Point2 dprime = (pair.d(z_on_d + h) - pair.d(z_on_d - h)) / (2.0 * h);
    const RealSubspace tangent_plane =
        real_span({dprime, kImagUnit * dprime});
    double worst = 0.0;
    for (int j = 0; j < range.dim(); ++j) {
        const Vec4 v = range.basis.col(j);
        worst = std::max(worst, (v - tangent_plane.project(v)).norm());
    }
    out.plane_residual = worst;
    out.pass = out.rank == 2 && worst < 1e-6;
    return out;
}

double manifold_C(const ManifoldInstance& instance, const Point2& mu) {
    const GPoint s = instance.inverse(mu);
    if (!is_interior(s)) throw std::domain_error("manifold_C: point not in the instance");
    return pseudo_param(s);
}

double manifold_P(const ManifoldInstance& instance, const Point2& mu) {
    return std::atanh(manifold_C(instance, mu));
}

double reparam_invariance_check(const ManifoldInstance& instance, const Point2& mu,
                                const DiscAutomorphism& b) {
    const GPoint s = instance.inverse(mu);
    const FlatLeaf leaf = leaf_of(s);
    const RoyalIntersection ri = royal_intersection(leaf);
    const double c1 = pseudohyperbolic(s.s2, ri.z0);
    // Second parametrization of the same leaf: f o b instead of f.
    const DiscAutomorphism binv = inverse(b);
    const double c2 = pseudohyperbolic(binv.apply(s.s2), binv.apply(ri.z0));
    return std::abs(c1 - c2);
}

std::function<Point2(Complex)> canonical_leaf_embedding(const ManifoldInstance& instance,
                                                        Complex z0) {
    const GPoint anchor = royal(z0);
    const FlatLeaf leaf = leaf_of(anchor);
    // Mobius change of variable sending z0 to the anchor's leaf coordinate
    // z0^2, so the embedding takes z0 to the royal point of the leaf.
    const DiscAutomorphism b = compose(blaschke(-z0 * z0), blaschke(z0));
    return [instance, leaf, b](Complex zeta) {
        return instance.forward(leaf_point(leaf, b.apply(zeta)));
    };
}

AxiomReport verify_synchrony(const ManifoldInstance& instance,
                             const ConcomitantPair& pair, Complex z0,
                             const std::vector<Complex>& etas,
                             const std::vector<Complex>& grid) {
    AxiomReport report;
    const auto f = canonical_leaf_embedding(instance, z0);
    double anchor_defect = (f(z0) - pair.d(z0)).norm();
    double worst = 0.0;
    for (const Complex& eta : etas) {
        const DiscAutomorphism m = conjugate_rotation(z0, eta);
        const auto theta_m = pair.theta(m);
        for (const Complex& zeta : grid) {
            const Complex twice = m.apply(m.apply(zeta));
            worst = std::max(worst, (theta_m(f(zeta)) - f(twice)).norm());
        }
    }
    report.residuals = {{"embedding_anchor", anchor_defect},
                        {"double_speed", worst}};
    return report;
}

}  // namespace symbidisc
