#include "symbidisc/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symbidisc/action.hpp"
#include "symbidisc/bidisc.hpp"
#include "symbidisc/mobius.hpp"

namespace symbidisc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AnnulusSymmetryResult annulus_symmetry_point(const AnnulusParams& params, Complex z,
                                             double tol) {
    if (!(params.q > 0.0 && params.q < 1.0))
        throw std::invalid_argument("annulus_symmetry_point: need 0 < q < 1");
    const double r = std::abs(z);
    if (!(r > params.q && r < 1.0 / params.q))
        throw std::invalid_argument("annulus_symmetry_point: point outside the annulus");
    AnnulusSymmetryResult out;
    out.is_symmetry_point = std::abs(r - 1.0) < tol;
    if (out.is_symmetry_point) {
        out.fixed_plus = z;
        out.fixed_minus = -z;
    }
    return out;
}

bool tetra_contains(const TetraPoint& x, int n, double margin) {
    if (n < 32) throw std::invalid_argument("tetra_contains: grid too coarse");
    // The defining function is holomorphic in (z, w), so interior zeros are
    // possible even when the torus values stay large; radial circles catch
    // those at sampling resolution.
    static constexpr double radii[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    double lowest = std::numeric_limits<double>::max();
    for (const double rz : radii) {
        for (const double rw : radii) {
            const int nz = rz == 0.0 ? 1 : n;
            const int nw = rw == 0.0 ? 1 : n;
            for (int i = 0; i < nz; ++i) {
                const Complex z = std::polar(rz, kTwoPi * i / nz);
                for (int j = 0; j < nw; ++j) {
                    const Complex w = std::polar(rw, kTwoPi * j / nw);
                    const Complex value =
                        1.0 - x.x1 * z - x.x2 * w + x.x3 * z * w;
                    lowest = std::min(lowest, std::abs(value));
                }
            }
        }
    }
    return lowest > margin;
}

TetraPoint tetra_leaf(Complex beta1, Complex beta2, Complex z) {
    if (std::abs(beta1) + std::abs(beta2) >= 1.0)
        throw std::invalid_argument("tetra_leaf: need |beta1| + |beta2| < 1");
    if (std::abs(z) >= 1.0) throw std::invalid_argument("tetra_leaf: z must be in the disc");
    return {beta1 + std::conj(beta2) * z, beta2 + std::conj(beta1) * z, z};
}

TetraAutomorphism tetra_origin_fixer_diag(Complex w1, Complex w2) {
    TetraAutomorphism out;
    out.matrix = Eigen::Matrix3cd::Zero();
    out.matrix(0, 0) = w1;
    out.matrix(1, 1) = w2;
    out.matrix(2, 2) = w1 * w2;
    out.map = [w1, w2](const TetraPoint& x) {
        return TetraPoint{w1 * x.x1, w2 * x.x2, w1 * w2 * x.x3};
    };
    out.label = "diag";
    return out;
}

TetraAutomorphism tetra_origin_fixer_swap(Complex w) {
    TetraAutomorphism out;
    out.matrix = Eigen::Matrix3cd::Zero();
    out.matrix(0, 1) = std::conj(w);
    out.matrix(1, 0) = w;
    out.matrix(2, 2) = 1.0;
    out.map = [w](const TetraPoint& x) {
        return TetraPoint{std::conj(w) * x.x2, w * x.x1, x.x3};
    };
    out.label = "swap";
    return out;
}

FixedClass classify_fixed_point(
    const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& g,
    const Eigen::VectorXcd& p, double tol, double probe_radius) {
    const Eigen::Index k = p.size();
    // Involutions only.
    Eigen::VectorXcd probe = p;
    probe(0) += Complex(0.3 * probe_radius, 0.1 * probe_radius);
    if ((g(g(probe)) - probe).norm() > 1e-6)
        throw std::invalid_argument("classify_fixed_point: map is not an involution");
    if ((g(p) - p).norm() >= tol) return FixedClass::NotFixed;

    // Linearize the displacement q -> g(q) - q around p on a sphere of
    // radius probe_radius; a nontrivial nullspace means the fixed set
    // continues through p.
    const Eigen::Index rk = 2 * k;
    Eigen::MatrixXd jac(rk, rk);
    for (Eigen::Index j = 0; j < rk; ++j) {
        Eigen::VectorXcd hi = p, lo = p;
        const Complex offset =
            (j % 2 == 0) ? Complex(probe_radius, 0.0) : Complex(0.0, probe_radius);
        hi(j / 2) += offset;
        lo(j / 2) -= offset;
        const Eigen::VectorXcd column =
            ((g(hi) - hi) - (g(lo) - lo)) / (2.0 * probe_radius);
        for (Eigen::Index i = 0; i < k; ++i) {
            jac(2 * i, j) = column(i).real();
            jac(2 * i + 1, j) = column(i).imag();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    return (smax == 0.0 || smin < 1e-6 * std::max(1.0, smax))
               ? FixedClass::NonIsolatedFixed
               : FixedClass::IsolatedFixed;
}

int linear_fixed_set_dimension(const Eigen::MatrixXcd& a, double rank_tol) {
    const Eigen::MatrixXcd shifted =
        a - Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= rank_tol * std::max(1.0, smax)) ++null_dim;
    return null_dim;
}

SymmetrySweepReport no_symmetry_sweep_g(std::span<const double> p_values) {
    SymmetrySweepReport report;
    // Any involution of G fixing (0, p) fixes the leaf F^0 and the royal
    // variety, hence their meeting point (0, 0); so the inducing disc map is
    // an involutive rotation: the identity or z -> -z.
    struct Candidate {
        std::string label;
        DiscAutomorphism m;
    };
    const std::vector<Candidate> candidates = {{"gamma_id", identity_automorphism()},
                                               {"gamma_neg", rotation(-1.0)}};
    for (const double p : p_values) {
        const Eigen::VectorXcd point = (Eigen::Vector2cd() << 0.0, p).finished();
        for (const Candidate& cand : candidates) {
            const auto eval = [&cand](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
                const GPoint moved = gamma(cand.m, GPoint{v(0), v(1)});
                return (Eigen::Vector2cd() << moved.s1, moved.s2).finished();
            };
            const FixedClass cls = classify_fixed_point(eval, point);
            report.entries.push_back({cand.label, p, cls});
            if (cls == FixedClass::IsolatedFixed) report.point_of_symmetry_found = true;
        }
    }
    return report;
}

SymmetrySweepReport no_symmetry_sweep_tetra(std::span<const double> p_values,
                                            int n_omega) {
    SymmetrySweepReport report;
    std::vector<TetraAutomorphism> candidates;
    for (const double a : {1.0, -1.0})
        for (const double b : {1.0, -1.0}) {
            TetraAutomorphism cand = tetra_origin_fixer_diag(a, b);
            cand.label = "diag(" + std::to_string(int(a)) + "," + std::to_string(int(b)) + ")";
            candidates.push_back(cand);
        }
    for (int k = 0; k < n_omega; ++k) {
        TetraAutomorphism cand = tetra_origin_fixer_swap(std::polar(1.0, kTwoPi * k / n_omega));
        cand.label = "swap_" + std::to_string(k);
        candidates.push_back(cand);
    }
    for (const double p : p_values) {
        const Eigen::VectorXcd point = (Eigen::Vector3cd() << 0.0, 0.0, p).finished();
        for (const TetraAutomorphism& cand : candidates) {
            const auto eval = [&cand](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
                return cand.map(TetraPoint::from(v)).vec();
            };
            const FixedClass cls = classify_fixed_point(eval, point);
            report.entries.push_back({cand.label, p, cls});
            if (cls == FixedClass::IsolatedFixed) report.point_of_symmetry_found = true;
        }
    }
    return report;
}

}  // namespace symbidisc
