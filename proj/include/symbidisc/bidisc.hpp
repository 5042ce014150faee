#pragma once

#include <utility>

#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// A point s = (s1, s2) of C^2, intended as pi(z, w) = (z + w, z w) for
/// z, w in the unit disc when it represents a point of G.
struct GPoint {
    Complex s1{0.0, 0.0};
    Complex s2{0.0, 0.0};

    Vec2c vec() const { return Vec2c(s1, s2); }
    static GPoint from(const Vec2c& v) { return {v(0), v(1)}; }
};

enum class Membership { Interior, Boundary, Outside };

GPoint symmetrize(Complex z, Complex w);  // pi(z, w) = (z + w, z w)

/// The unordered root pair of lambda^2 - s1 lambda + s2, returned sorted by
/// (Re, Im) for determinism only; consumers must stay symmetric in (z, w).
std::pair<Complex, Complex> roots(const GPoint& s);

Membership classify_membership(const GPoint& s, double tol = 1e-10);
bool is_interior(const GPoint& s, double tol = 1e-10);

GPoint royal(Complex zeta);  // R(zeta) = (2 zeta, zeta^2)
bool is_royal(const GPoint& s, double tol = 1e-9);
Complex royal_param(const GPoint& s, double tol = 1e-9);  // rejects non-royal s

/// The flat geodesic F^beta = {(beta + conj(beta) z, z) : z in D}.
struct FlatLeaf {
    Complex beta{0.0, 0.0};
};

/// The unique leaf through an interior point: beta = (s1 - conj(s1) s2)/(1 - |s2|^2).
FlatLeaf leaf_of(const GPoint& s);

GPoint leaf_point(const FlatLeaf& leaf, Complex z);

/// Global chart (beta, z) <-> point of G.
struct FlatCoordinates {
    Complex beta{0.0, 0.0};
    Complex z{0.0, 0.0};
};

FlatCoordinates flat_coords(const GPoint& s);
GPoint from_flat_coords(const FlatCoordinates& fc);

struct RoyalIntersection {
    GPoint point;  // the unique royal point on the leaf
    Complex z0;    // its leaf coordinate
};

/// Solves conj(beta)^2 z^2 + (2|beta|^2 - 4) z + beta^2 = 0 for the single
/// root in the open disc.
RoyalIntersection royal_intersection(const FlatLeaf& leaf);

/// Pseudohyperbolic distance, within the leaf of s, from s to the royal
/// intersection point.  Vanishes exactly on the royal variety.
double pseudo_param(const GPoint& s);
double poincare_param(const GPoint& s);

}  // namespace symbidisc
