#include "symbidisc/mobius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symbidisc {

namespace {
constexpr double kPi = std::numbers::pi;
}

DiscAutomorphism identity_automorphism() { return {}; }

DiscAutomorphism rotation(Complex eta) { return make_automorphism(eta, 0.0); }

DiscAutomorphism blaschke(Complex alpha) { return make_automorphism(1.0, alpha); }

DiscAutomorphism make_automorphism(Complex omega, Complex alpha) {
    const double len = std::abs(omega);
    if (std::abs(len - 1.0) > 1e-9)
        throw std::invalid_argument("DiscAutomorphism: |omega| must be 1");
    if (std::abs(alpha) >= 1.0)
        throw std::invalid_argument("DiscAutomorphism: |alpha| must be < 1");
    return {omega / len, alpha};
}

Complex DiscAutomorphism::apply(Complex z) const {
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("apply: point must lie in the open disc");
    return omega * (z - alpha) / (1.0 - std::conj(alpha) * z);
}

Complex derivative(const DiscAutomorphism& m, Complex z) {
    const Complex den = 1.0 - std::conj(m.alpha) * z;
    return m.omega * (1.0 - std::norm(m.alpha)) / (den * den);
}

DiscAutomorphism compose(const DiscAutomorphism& m1, const DiscAutomorphism& m2) {
    // m1(m2(z)) = omega1 (a z - c) / (d - b z) with the coefficients below;
    // b/d = conj(c/a) holds identically, so the result is again canonical.
    const Complex a = m2.omega + m1.alpha * std::conj(m2.alpha);
    const Complex c = m2.omega * m2.alpha + m1.alpha;
    const Complex d = 1.0 + std::conj(m1.alpha) * m2.omega * m2.alpha;
    Complex omega = m1.omega * a / d;
    omega /= std::abs(omega);  // stop drift under long composition chains
    return {omega, c / a};
}

DiscAutomorphism inverse(const DiscAutomorphism& m) {
    return {std::conj(m.omega), -m.omega * m.alpha};
}

double automorphism_distance(const DiscAutomorphism& m1, const DiscAutomorphism& m2) {
    return std::abs(m1.omega - m2.omega) + std::abs(m1.alpha - m2.alpha);
}

bool is_identity(const DiscAutomorphism& m, double tol) {
    return automorphism_distance(m, identity_automorphism()) < tol;
}

Chart chart_of(const DiscAutomorphism& m) {
    double r = std::arg(m.omega);
    if (r <= -kPi + 1e-15) r += 2.0 * kPi;
    if (r > kPi - 1e-14) return {ChartId::U2, kPi, m.alpha};
    return {ChartId::U1, r, m.alpha};
}

DiscAutomorphism m_from_chart(ChartId id, double r, Complex alpha) {
    if (id == ChartId::U1) {
        if (!(r > -kPi && r < kPi))
            throw std::invalid_argument("m_from_chart: U1 requires r in (-pi, pi)");
    } else {
        if (!(r > 0.0 && r < 2.0 * kPi))
            throw std::invalid_argument("m_from_chart: U2 requires r in (0, 2 pi)");
    }
    return m_from_chart(r, alpha);
}

DiscAutomorphism m_from_chart(double r, Complex alpha) {
    return make_automorphism(std::polar(1.0, r), alpha);
}

double pseudohyperbolic(Complex z1, Complex z2) {
    return std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
}

double poincare(Complex z1, Complex z2) {
    return std::atanh(pseudohyperbolic(z1, z2));
}

DiscAutomorphism conjugate_rotation(Complex alpha_fix, Complex eta) {
    return compose(blaschke(-alpha_fix), compose(rotation(eta), blaschke(alpha_fix)));
}

bool is_involution(const DiscAutomorphism& m, double tol) {
    return is_identity(compose(m, m), tol);
}

MobiusFixedPoints fixed_points(const DiscAutomorphism& m) {
    MobiusFixedPoints out;
    if (is_identity(m)) {
        out.whole_disc = true;
        return out;
    }
    // m(z) = z  <=>  conj(alpha) z^2 + (omega - 1) z - omega alpha = 0.
    const auto roots =
        solve_quadratic(std::conj(m.alpha), m.omega - 1.0, -m.omega * m.alpha);
    for (const Complex& z : roots) {
        if (std::abs(z) > 1.0 + 1e-9) continue;
        bool duplicate = false;
        for (const Complex& seen : out.points)
            if (std::abs(seen - z) < 1e-12) duplicate = true;
        if (!duplicate) out.points.push_back(z);
    }
    return out;
}

DiscAutomorphism inner_automorphism(const DiscAutomorphism& b, const DiscAutomorphism& m) {
    return compose(b, compose(m, inverse(b)));
}

}  // namespace symbidisc
