#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symbidisc/numerics.hpp"

namespace symbidisc {

struct TetraPoint {
    Complex x1, x2, x3;

    Eigen::Vector3cd vec() const { return Eigen::Vector3cd(x1, x2, x3); }
    static TetraPoint from(const Eigen::Vector3cd& v) { return {v(0), v(1), v(2)}; }
};

struct AnnulusParams {
    double q;  // inner radius; the annulus is q < |z| < 1/q
};

struct AnnulusSymmetryResult {
    bool is_symmetry_point = false;
    // Certificate when true: zeta -> z^2/zeta is an involutive automorphism
    // of the annulus with isolated fixed points +-z.
    Complex fixed_plus, fixed_minus;
};

/// A point of the annulus is a point of symmetry iff it lies on the unit
/// circle.  Rejects points outside the annulus.
AnnulusSymmetryResult annulus_symmetry_point(const AnnulusParams& params, Complex z,
                                             double tol = 1e-9);

/// Sampled membership test for the tetrablock: 1 - x1 z - x2 w + x3 z w must
/// stay away from zero on the closed bidisc.  Approximate by construction;
/// the margin guards the sampled minimum.
bool tetra_contains(const TetraPoint& x, int n = 64, double margin = 1e-6);

/// Point of the leaf C_{beta1 beta2} = {(beta1 + conj(beta2) z,
/// beta2 + conj(beta1) z, z)}; requires |beta1| + |beta2| < 1.
TetraPoint tetra_leaf(Complex beta1, Complex beta2, Complex z);

/// An origin-fixing tetrablock automorphism candidate.  All candidates are
/// linear, so the matrix representation travels with the evaluator.
struct TetraAutomorphism {
    std::function<TetraPoint(const TetraPoint&)> map;
    Eigen::Matrix3cd matrix;
    std::string label;
};

TetraAutomorphism tetra_origin_fixer_diag(Complex w1, Complex w2);
TetraAutomorphism tetra_origin_fixer_swap(Complex w);  // involution form

enum class FixedClass { IsolatedFixed, NonIsolatedFixed, NotFixed };

/// Classifies a fixed point of an involution of C^k: fixed or not, and if
/// fixed whether the linearized fixed-point equation admits other solutions
/// nearby (probed on a small sphere; exact for the linear candidates).
FixedClass classify_fixed_point(
    const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& g,
    const Eigen::VectorXcd& p, double tol = 1e-9, double probe_radius = 1e-3);

/// Kernel dimension of (A - I) over C; the fixed set of a linear involution.
int linear_fixed_set_dimension(const Eigen::MatrixXcd& a, double rank_tol = 1e-9);

struct SweepEntry {
    std::string candidate;
    double p;
    FixedClass cls;
};

struct SymmetrySweepReport {
    std::vector<SweepEntry> entries;
    bool point_of_symmetry_found = false;
};

/// Representatives (0, p) in G against the involutive candidates fixing the
/// origin (the identity and the root-negation automorphism).
SymmetrySweepReport no_symmetry_sweep_g(std::span<const double> p_values);

/// Representatives (0, 0, p) in the tetrablock against the four diagonal
/// involutions and the swap family sampled over the circle.
SymmetrySweepReport no_symmetry_sweep_tetra(std::span<const double> p_values,
                                            int n_omega = 16);

}  // namespace symbidisc
