#include "symbidisc/bundles.hpp"

#include <cmath>
#include <stdexcept>

namespace symbidisc {

ComplexLine sharp_numeric(const GPoint& s) {
    const OrbitTangentReport orbit = orbit_tangent(s);
    const RealSubspace meet = intersect(orbit.subspace, multiply_i(orbit.subspace));
    if (meet.dim() != 2)
        throw std::domain_error("sharp_numeric: intersection is not a complex line");
    return complex_line(to_complex(meet.basis.col(0)));
}

ComplexLine sharp_closed(const GPoint& s) {
    if (!is_interior(s)) throw std::domain_error("sharp_closed: point not interior to G");
    const Complex beta = leaf_of(s).beta;
    const Complex half_s1 = 0.5 * s.s1;
    return complex_line(Vec2c(1.0, (beta - half_s1) / (1.0 - std::conj(beta) * half_s1)));
}

ComplexLine flat_direction(const GPoint& s) {
    if (!is_interior(s)) throw std::domain_error("flat_direction: point not interior to G");
    return complex_line(Vec2c(std::conj(leaf_of(s).beta), 1.0));
}

double covariance_residual(const DiscAutomorphism& m, const GPoint& s) {
    const Eigen::Matrix2cd j = gamma_jacobian(m, s);
    const ComplexLine pushed = complex_line(j * sharp_closed(s).direction);
    return projective_distance(pushed, sharp_closed(gamma(m, s)));
}

double flat_covariance_residual(const DiscAutomorphism& m, const GPoint& s) {
    const Eigen::Matrix2cd j = gamma_jacobian(m, s);
    const ComplexLine pushed = complex_line(j * flat_direction(s).direction);
    return projective_distance(pushed, flat_direction(gamma(m, s)));
}

double direct_sum_check(const GPoint& s) {
    const Vec2c a = sharp_closed(s).direction;
    const Vec2c b = flat_direction(s).direction;
    return std::abs(a(0) * b(1) - a(1) * b(0));
}

}  // namespace symbidisc
