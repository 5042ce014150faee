#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symbidisc/action.hpp"
#include "symbidisc/bidisc.hpp"
#include "symbidisc/mobius.hpp"

namespace symbidisc {

using Point2 = Vec2c;

/// A biholomorphic image Omega of G, packaged as a forward/inverse evaluator
/// pair.  make_* constructors guarantee the round-trip and holomorphy
/// invariants; tests may build non-holomorphic instances directly as
/// negative controls.
struct ManifoldInstance {
    std::function<Point2(const GPoint&)> forward;
    std::function<GPoint(const Point2&)> inverse;
    std::string label;

    Membership probe(const Point2& mu, double tol = 1e-10) const {
        return classify_membership(inverse(mu), tol);
    }
};

ManifoldInstance make_identity_instance();
ManifoldInstance make_linear_instance(const Eigen::Matrix2cd& a);  // rejects singular a
ManifoldInstance make_triangular_instance(Complex eps);  // (s1, s2 + eps s1^2)

/// Checks the instance invariants (inverse round trip, forward holomorphy)
/// on a deterministic sample; throws on violation.
void validate_instance(const ManifoldInstance& instance, int samples = 25,
                       double tol = 1e-8);

/// A concomitant pair (d, Theta): a parametrization of the royal disc of the
/// instance together with the induced group isomorphism Aut D -> Aut Omega.
struct ConcomitantPair {
    std::function<Point2(Complex)> d;
    std::function<std::function<Point2(const Point2&)>(const DiscAutomorphism&)> theta;
};

/// d = Lambda o R, Theta(m) = Lambda o gamma_m o Lambda^{-1}.
ConcomitantPair consistent_pair(const ManifoldInstance& instance);

/// (d o b, Theta o I_b): the reparametrized pair is concomitant again.
ConcomitantPair reparametrized_pair(const ConcomitantPair& pair,
                                    const DiscAutomorphism& b);

struct AxiomReport {
    std::vector<std::pair<std::string, double>> residuals;
    double tol = 1e-7;

    double max_residual() const;
    bool pass() const { return max_residual() < tol; }
};

/// Royal-disc axioms: Theta-images keep D invariant, Theta(m) agrees with
/// itself off D (determinism smoke check), and every disc automorphism
/// extends through Theta(b) o d = d o b.
AxiomReport verify_royal_axioms(const ManifoldInstance& instance,
                                const ConcomitantPair& pair,
                                const std::vector<DiscAutomorphism>& sample_m,
                                const std::vector<Complex>& sample_z);

/// Flat-fibration axioms for E_lambda = Lambda(F_s): unique royal meeting
/// point, leaf-constancy of the fibration, and Theta-covariance of leaves.
AxiomReport verify_flat_fibration(const ManifoldInstance& instance,
                                  const std::vector<DiscAutomorphism>& sample_m,
                                  const std::vector<Complex>& royal_z,
                                  const std::vector<Complex>& leaf_z);

/// Finite-difference derivative at the identity of m -> Theta(m)(mu), as a
/// 4x3 real matrix in the chart coordinates (r, Re alpha, Im alpha).
Eigen::Matrix<double, 4, 3> evaluation_derivative(const ConcomitantPair& pair,
                                                  const Point2& mu,
                                                  double step = 1e-5);

/// Regularity off D: the evaluation derivative has rank 3 and the stabilizer
/// has order 2 (via pullback).
AxiomReport verify_regularity(const ManifoldInstance& instance,
                              const ConcomitantPair& pair,
                              const std::vector<Point2>& samples_off_d,
                              double rank_tol = 1e-9);

struct RoyalTangentReport {
    int rank = 0;
    double plane_residual = 0.0;
    bool pass = false;
};

/// On D the evaluation derivative drops to rank 2 and its range is exactly
/// the complex tangent line of the royal disc.
RoyalTangentReport royal_tangent_surjectivity(const ManifoldInstance& instance,
                                              const ConcomitantPair& pair,
                                              Complex z_on_d,
                                              double rank_tol = 1e-9);

/// Leaf-internal pseudohyperbolic distance from mu to the royal disc,
/// computed intrinsically through the pullback fibration.
double manifold_C(const ManifoldInstance& instance, const Point2& mu);
double manifold_P(const ManifoldInstance& instance, const Point2& mu);

/// Computes C twice, with the canonical leaf parametrization and with a
/// Mobius-reparametrized one; returns the disagreement (should vanish).
double reparam_invariance_check(const ManifoldInstance& instance, const Point2& mu,
                                const DiscAutomorphism& b);

/// Synchrony at d(z0): Theta(m) o f = f o m o m along the leaf through d(z0)
/// for automorphisms m fixing z0.
AxiomReport verify_synchrony(const ManifoldInstance& instance,
                             const ConcomitantPair& pair, Complex z0,
                             const std::vector<Complex>& etas,
                             const std::vector<Complex>& grid);

/// The canonical proper embedding of the leaf through d(z0): maps z0 to the
/// royal point and the disc onto E_{d(z0)}.
std::function<Point2(Complex)> canonical_leaf_embedding(const ManifoldInstance& instance,
                                                        Complex z0);

}  // namespace symbidisc
