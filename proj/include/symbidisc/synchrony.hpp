#pragma once

#include <span>
#include <vector>

#include "symbidisc/royal_manifold.hpp"

namespace symbidisc {

/// Eigenstructure of theta'(s0) at a fixed royal point: the royal tangent
/// carries eigenvalue eta, the leaf tangent carries eta^2.
struct SynchronyReport {
    Complex royal_eigenvalue{0.0, 0.0};
    Complex flat_eigenvalue{0.0, 0.0};
    Complex eta{0.0, 0.0};
    double residual_royal = 0.0;
    double residual_flat = 0.0;

    bool valid(double tol = 1e-7) const {
        return residual_royal < tol && residual_flat < tol;
    }
};

SynchronyReport royal_eigencheck(Complex alpha_fix, Complex eta);

/// Max over the grid of || gamma_m(g(zeta)) - g(m(m(zeta))) || for the
/// canonical leaf embedding g through the royal point of alpha_fix and
/// m = conjugate_rotation(alpha_fix, eta).
double leaf_double_speed_residual(Complex alpha_fix, Complex eta,
                                  std::span<const Complex> grid);

/// e^{2P(mu)} (Theta(B_{it})(mu) - mu) - i (Theta(B_t)(mu) - mu) in the
/// ambient-identity chart; o(t) exactly when the action is sharp at mu.
Vec2c sharp_action_residual(const ManifoldInstance& instance, const Point2& mu,
                            double t);

struct SharpnessReport {
    std::vector<double> t_values;       // strictly decreasing
    std::vector<double> residual_norms;
    double fitted_slope = 0.0;          // log-log least squares
};

SharpnessReport sharp_action_order(const ManifoldInstance& instance, const Point2& mu,
                                   std::span<const double> t_values);

/// Sharpness verdict: slope at least slope_min, with an absolute floor for
/// residuals already at numerical noise (close to the royal disc).
bool sharpness_accepted(const SharpnessReport& report, double slope_min = 1.8,
                        double noise_floor = 1e-12);

struct TransportReport {
    double clin_residual = 0.0;        // || X(iv) - i X(v) || / || X(v) ||
    double membership_residual = 0.0;  // projective defect of X(s-sharp) in mu-sharp
    bool pass = false;
};

/// X = e_mu'(id) e_s'(id)^{-1} maps the sharp direction of s to the sharp
/// direction of mu and is complex-linear there, whenever C(s) = C(mu).
TransportReport transported_linearity_check(const ManifoldInstance& instance,
                                            const GPoint& s, const Point2& mu,
                                            double fd_step = 1e-5);

}  // namespace symbidisc
