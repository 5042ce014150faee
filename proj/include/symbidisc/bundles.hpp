#pragma once

#include "symbidisc/action.hpp"

namespace symbidisc {

/// The sharp direction as the intersection V(s) cap i V(s) of the orbit
/// tangent space with its rotation; rejects degenerate intersections.
ComplexLine sharp_numeric(const GPoint& s);

/// Closed form: C (1, (beta - s1/2) / (1 - conj(beta) s1/2)).
ComplexLine sharp_closed(const GPoint& s);

/// Tangent line to the flat leaf through s: C (conj(beta), 1).
ComplexLine flat_direction(const GPoint& s);

/// Projective defect of gamma_m'(s) s-sharp against (gamma_m(s))-sharp.
double covariance_residual(const DiscAutomorphism& m, const GPoint& s);

/// Same covariance defect for the flat direction (leaves map to leaves).
double flat_covariance_residual(const DiscAutomorphism& m, const GPoint& s);

/// |det [sharp flat]| with unit columns; strictly positive on G since the
/// two line bundles are nowhere equal.
double direct_sum_check(const GPoint& s);

}  // namespace symbidisc
