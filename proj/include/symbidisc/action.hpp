#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symbidisc/bidisc.hpp"
#include "symbidisc/mobius.hpp"
#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// Tangent space to the orbit of s under the induced Aut D action, together
/// with the three explicit spanning vectors and the numerical rank (3 off the
/// royal variety, 2 on it).
struct OrbitTangentReport {
    RealSubspace subspace;
    int rank = 0;
    std::array<Vec2c, 3> spanning;
};

enum class StabilizerOrder { Two, Infinite };

/// gamma_m(s): pushforward of m through the symmetrization map.
GPoint gamma(const DiscAutomorphism& m, const GPoint& s);

/// Closed rational form of gamma_{m_{r,alpha}}(s); equals gamma on G.
GPoint eval_formula(const GPoint& s, double r, Complex alpha);

/// The unique automorphism interchanging the two roots of a non-royal point.
DiscAutomorphism swap_automorphism(const GPoint& s);

StabilizerOrder stabilizer_order(const GPoint& s);

/// v_{r,alpha}(s) = i r (s1, 2 s2) - a (2, s1) + conj(a) ((s1)^2 - 2 s2, s1 s2).
Vec2c tangent_v(const GPoint& s, const LieTangent& lt);

OrbitTangentReport orbit_tangent(const GPoint& s, double rank_tol = 1e-9);

/// Derivative of gamma_m at s as a complex 2x2 matrix.  Away from the royal
/// variety this is assembled from the implicit derivatives of the root pair;
/// near a root collision it falls back to central differences.
Eigen::Matrix2cd gamma_jacobian(const DiscAutomorphism& m, const GPoint& s,
                                double fd_step = 1e-5);

/// Derivative at the identity of the evaluation map m -> gamma_m(s), as a
/// 4x3 real matrix in the chart coordinates (r, Re alpha, Im alpha).
Eigen::Matrix<double, 4, 3> es_prime(const GPoint& s);

/// Pseudo-inverse of es_prime on its column space; rejects royal points,
/// where the rank drops to 2.
Eigen::Matrix<double, 3, 4> es_prime_pinv(const GPoint& s);

struct FiberHit {
    DiscAutomorphism m;
    double residual;
};

/// Scans an n x n x n chart grid for automorphisms with gamma_m(s) close to
/// s.  A sampling check of the two-to-one covering, not a proof.
std::vector<FiberHit> fiber_search(const GPoint& s, int n, double capture);

/// Gauss-Newton refinement of a fiber candidate; empty if it fails to
/// converge to gamma_m(s) = s.
std::optional<DiscAutomorphism> refine_fiber_point(const GPoint& s,
                                                   const DiscAutomorphism& start,
                                                   double tol = 1e-12,
                                                   int max_iter = 40);

}  // namespace symbidisc
