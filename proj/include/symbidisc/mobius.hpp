#pragma once

#include <vector>

#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// A disc automorphism m(z) = omega (z - alpha) / (1 - conj(alpha) z) with
/// |omega| = 1 and |alpha| < 1.  The (omega, alpha) pair is a canonical
/// representation: two automorphisms are equal iff their parameters are.
struct DiscAutomorphism {
    Complex omega{1.0, 0.0};
    Complex alpha{0.0, 0.0};

    /// Evaluation at a point of the open disc; rejects |z| >= 1.
    Complex apply(Complex z) const;
};

/// Tangent vector to Aut D at the identity, in the chart coordinates
/// (r, Re alpha, Im alpha): r is the rotation rate, a = delta2 + i delta3.
struct LieTangent {
    double r = 0.0;
    Complex a{0.0, 0.0};
};

DiscAutomorphism identity_automorphism();
DiscAutomorphism rotation(Complex eta);   // rho_eta(z) = eta z
DiscAutomorphism blaschke(Complex alpha); // B_alpha(z) = (z - alpha)/(1 - conj(alpha) z)

/// Validates |omega| ~ 1 and |alpha| < 1, renormalizing omega exactly to the
/// unit circle.
DiscAutomorphism make_automorphism(Complex omega, Complex alpha);

/// m'(z) = omega (1 - |alpha|^2) / (1 - conj(alpha) z)^2.
Complex derivative(const DiscAutomorphism& m, Complex z);

DiscAutomorphism compose(const DiscAutomorphism& m1, const DiscAutomorphism& m2);
DiscAutomorphism inverse(const DiscAutomorphism& m);

/// |omega1 - omega2| + |alpha1 - alpha2|; a metric since the representation
/// is canonical.
double automorphism_distance(const DiscAutomorphism& m1, const DiscAutomorphism& m2);
bool is_identity(const DiscAutomorphism& m, double tol = 1e-12);

enum class ChartId { U1, U2 };

struct Chart {
    ChartId id;
    double r;
    Complex alpha;
};

/// Chart coordinates of m in the two-chart atlas: U1 has r in (-pi, pi),
/// U2 has r in (0, 2 pi).  U1 is preferred whenever r != pi (mod 2 pi).
Chart chart_of(const DiscAutomorphism& m);
DiscAutomorphism m_from_chart(ChartId id, double r, Complex alpha);
DiscAutomorphism m_from_chart(double r, Complex alpha);  // m_{r,alpha}, any real r

double pseudohyperbolic(Complex z1, Complex z2);
double poincare(Complex z1, Complex z2);

/// The automorphism B_{-a} o rho_eta o B_a: fixes a with multiplier eta.
DiscAutomorphism conjugate_rotation(Complex alpha_fix, Complex eta);

bool is_involution(const DiscAutomorphism& m, double tol = 1e-9);

struct MobiusFixedPoints {
    bool whole_disc = false;      // set for the identity
    std::vector<Complex> points;  // fixed points in the closed disc
};

MobiusFixedPoints fixed_points(const DiscAutomorphism& m);

/// I_b(m) = b o m o b^{-1}.
DiscAutomorphism inner_automorphism(const DiscAutomorphism& b, const DiscAutomorphism& m);

}  // namespace symbidisc
