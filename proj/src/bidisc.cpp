#include "symbidisc/bidisc.hpp"

#include <cmath>
#include <stdexcept>

#include "symbidisc/mobius.hpp"

namespace symbidisc {

GPoint symmetrize(Complex z, Complex w) { return {z + w, z * w}; }

std::pair<Complex, Complex> roots(const GPoint& s) {
    auto sols = solve_quadratic(1.0, -s.s1, s.s2);
    if (sols.size() == 1) sols.push_back(sols[0]);
    if (sols.empty()) sols = {Complex(0.0), Complex(0.0)};
    Complex a = sols[0], b = sols[1];
    if (a.real() > b.real() ||
        (a.real() == b.real() && a.imag() > b.imag()))
        std::swap(a, b);
    return {a, b};
}

Membership classify_membership(const GPoint& s, double tol) {
    const auto [z, w] = roots(s);
    const double m = std::max(std::abs(z), std::abs(w));
    if (m < 1.0 - tol) return Membership::Interior;
    if (m <= 1.0 + tol) return Membership::Boundary;
    return Membership::Outside;
}

bool is_interior(const GPoint& s, double tol) {
    return classify_membership(s, tol) == Membership::Interior;
}

GPoint royal(Complex zeta) { return {2.0 * zeta, zeta * zeta}; }

bool is_royal(const GPoint& s, double tol) {
    return std::abs(s.s1 * s.s1 - 4.0 * s.s2) < tol;
}

Complex royal_param(const GPoint& s, double tol) {
    if (!is_royal(s, tol))
        throw std::domain_error("royal_param: point is not on the royal variety");
    return 0.5 * s.s1;
}

FlatLeaf leaf_of(const GPoint& s) {
    const double p2 = std::norm(s.s2);
    if (std::abs(p2 - 1.0) < 1e-14)
        throw std::domain_error("leaf_of: |s2| = 1 has no interior leaf");
    return {(s.s1 - std::conj(s.s1) * s.s2) / (1.0 - p2)};
}

GPoint leaf_point(const FlatLeaf& leaf, Complex z) {
    return {leaf.beta + std::conj(leaf.beta) * z, z};
}

FlatCoordinates flat_coords(const GPoint& s) { return {leaf_of(s).beta, s.s2}; }

GPoint from_flat_coords(const FlatCoordinates& fc) {
    return leaf_point(FlatLeaf{fc.beta}, fc.z);
}

RoyalIntersection royal_intersection(const FlatLeaf& leaf) {
    const Complex beta = leaf.beta;
    if (std::abs(beta) < 1e-300) return {royal(0.0), Complex(0.0)};
    // (beta + conj(beta) z)^2 = 4 z on the leaf.
    const Complex cb = std::conj(beta);
    const auto sols = solve_quadratic(cb * cb, 2.0 * std::norm(beta) - 4.0, beta * beta);
    Complex z0;
    bool found = false;
    for (const Complex& z : sols) {
        if (std::abs(z) < 1.0 && (!found || std::abs(z) < std::abs(z0))) {
            z0 = z;
            found = true;
        }
    }
    if (!found)
        throw std::domain_error("royal_intersection: no root in the open disc");
    return {leaf_point(leaf, z0), z0};
}

double pseudo_param(const GPoint& s) {
    const auto meet = royal_intersection(leaf_of(s));
    return pseudohyperbolic(s.s2, meet.z0);
}

double poincare_param(const GPoint& s) { return std::atanh(pseudo_param(s)); }

}  // namespace symbidisc
