#include "symbidisc/action.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symbidisc {

namespace {
constexpr double kPi = std::numbers::pi;

void require_interior(const GPoint& s, const char* who) {
    if (!is_interior(s)) throw std::domain_error(std::string(who) + ": point not interior to G");
}
}  // namespace

GPoint gamma(const DiscAutomorphism& m, const GPoint& s) {
    require_interior(s, "gamma");
    const auto [z, w] = roots(s);
    return symmetrize(m.apply(z), m.apply(w));
}

GPoint eval_formula(const GPoint& s, double r, Complex alpha) {
    require_interior(s, "eval_formula");
    const Complex ca = std::conj(alpha);
    const Complex phase = std::polar(1.0, r);
    const Complex den = 1.0 - ca * s.s1 + ca * ca * s.s2;
    const Complex first =
        phase * (-2.0 * alpha + (1.0 + std::norm(alpha)) * s.s1 - 2.0 * ca * s.s2);
    const Complex second = phase * phase * (alpha * alpha - alpha * s.s1 + s.s2);
    return {first / den, second / den};
}

DiscAutomorphism swap_automorphism(const GPoint& s) {
    require_interior(s, "swap_automorphism");
    if (is_royal(s)) throw std::domain_error("swap_automorphism: royal point has equal roots");
    const auto [z, w] = roots(s);
    // Conjugate by B_z: the involution swapping 0 and u = B_z(w) is
    // zeta -> (u - zeta)/(1 - conj(u) zeta), i.e. (omega, alpha) = (-1, u).
    const DiscAutomorphism bz = blaschke(z);
    const DiscAutomorphism mid = make_automorphism(-1.0, bz.apply(w));
    return compose(inverse(bz), compose(mid, bz));
}

StabilizerOrder stabilizer_order(const GPoint& s) {
    require_interior(s, "stabilizer_order");
    return is_royal(s) ? StabilizerOrder::Infinite : StabilizerOrder::Two;
}

Vec2c tangent_v(const GPoint& s, const LieTangent& lt) {
    require_interior(s, "tangent_v");
    const Complex ca = std::conj(lt.a);
    Vec2c v;
    v(0) = kImagUnit * lt.r * s.s1 - lt.a * 2.0 + ca * (s.s1 * s.s1 - 2.0 * s.s2);
    v(1) = kImagUnit * lt.r * 2.0 * s.s2 - lt.a * s.s1 + ca * (s.s1 * s.s2);
    return v;
}

OrbitTangentReport orbit_tangent(const GPoint& s, double rank_tol) {
    require_interior(s, "orbit_tangent");
    OrbitTangentReport out;
    const Complex s1 = s.s1, s2 = s.s2;
    out.spanning[0] = Vec2c(kImagUnit * s1, kImagUnit * 2.0 * s2);
    out.spanning[1] = Vec2c(2.0 - s1 * s1 + 2.0 * s2, s1 - s1 * s2);
    out.spanning[2] =
        Vec2c(kImagUnit * (2.0 + s1 * s1 - 2.0 * s2), kImagUnit * (s1 + s1 * s2));
    out.subspace = real_span({out.spanning[0], out.spanning[1], out.spanning[2]}, rank_tol);
    out.rank = out.subspace.dim();
    return out;
}

Eigen::Matrix2cd gamma_jacobian(const DiscAutomorphism& m, const GPoint& s,
                                double fd_step) {
    require_interior(s, "gamma_jacobian");
    const auto [z, w] = roots(s);
    if (std::abs(z - w) < 1e-4) {
        // The implicit-differentiation formulas blow up like 1/(z - w);
        // fall back to finite differences near a root collision.  gamma_m is
        // holomorphic, so the Cauchy-Riemann gate only guards against gross
        // misuse and is looser than the general-purpose oracle's.
        const auto jac = numeric_jacobian(
            [&m](const Vec2c& v) { return gamma(m, GPoint::from(v)).vec(); },
            s.vec(), fd_step);
        if (jac.complex_form) return *jac.complex_form;
        if (jac.cr_residual > 1e-6)
            throw std::domain_error("gamma_jacobian: finite differences lost holomorphy");
        Eigen::Matrix2cd fd;
        fd(0, 0) = Complex(jac.real(0, 0), jac.real(1, 0));
        fd(1, 0) = Complex(jac.real(2, 0), jac.real(3, 0));
        fd(0, 1) = Complex(jac.real(0, 2), jac.real(1, 2));
        fd(1, 1) = Complex(jac.real(2, 2), jac.real(3, 2));
        return fd;
    }
    const Complex gap = z - w;
    const Complex mz = m.apply(z), mw = m.apply(w);
    const Complex dz = derivative(m, z), dw = derivative(m, w);
    Eigen::Matrix2cd j;
    j(0, 0) = (dz * z - dw * w) / gap;
    j(0, 1) = -(dz - dw) / gap;
    j(1, 0) = (dz * mw * z - mz * dw * w) / gap;
    j(1, 1) = -(dz * mw - mz * dw) / gap;
    return j;
}

Eigen::Matrix<double, 4, 3> es_prime(const GPoint& s) {
    require_interior(s, "es_prime");
    Eigen::Matrix<double, 4, 3> e;
    e.col(0) = to_real(tangent_v(s, {1.0, 0.0}));
    e.col(1) = to_real(tangent_v(s, {0.0, 1.0}));
    e.col(2) = to_real(tangent_v(s, {0.0, kImagUnit}));
    return e;
}

Eigen::Matrix<double, 3, 4> es_prime_pinv(const GPoint& s) {
    if (is_royal(s))
        throw std::domain_error("es_prime_pinv: rank deficient on the royal variety");
    const Eigen::Matrix<double, 4, 3> e = es_prime(s);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(2) <= 1e-9 * sv(0))
        throw std::domain_error("es_prime_pinv: numerically rank deficient");
    Eigen::Matrix3d inv_sv = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) inv_sv(i, i) = 1.0 / sv(i);
    return svd.matrixV() * inv_sv * svd.matrixU().transpose();
}

std::vector<FiberHit> fiber_search(const GPoint& s, int n, double capture) {
    require_interior(s, "fiber_search");
    if (n < 2) throw std::invalid_argument("fiber_search: grid too small");
    std::vector<FiberHit> hits;
    const Vec2c target = s.vec();
    for (int i = 0; i < n; ++i) {
        const double r = -kPi + 2.0 * kPi * (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            const double rho = 0.95 * j / n;
            for (int k = 0; k < (j == 0 ? 1 : n); ++k) {
                const Complex alpha = std::polar(rho, 2.0 * kPi * k / n);
                const DiscAutomorphism m = m_from_chart(r, alpha);
                const double res = (gamma(m, s).vec() - target).norm();
                if (res < capture) hits.push_back({m, res});
            }
        }
    }
    return hits;
}

std::optional<DiscAutomorphism> refine_fiber_point(const GPoint& s,
                                                   const DiscAutomorphism& start,
                                                   double tol, int max_iter) {
    const Vec2c target = s.vec();
    const Chart c = chart_of(start);
    double r = c.r;
    Complex alpha = c.alpha;
    const double h = 1e-6;
    auto eval = [&](double rr, Complex aa) {
        return to_real(gamma(m_from_chart(rr, aa), s).vec());
    };
    auto residual = [&](double rr, Complex aa) { return (eval(rr, aa) - to_real(target)); };
    double best = residual(r, alpha).norm();
    for (int iter = 0; iter < max_iter; ++iter) {
        if (best < tol) return m_from_chart(r, alpha);
        const Vec4 res = residual(r, alpha);
        Eigen::Matrix<double, 4, 3> j;
        j.col(0) = (eval(r + h, alpha) - eval(r - h, alpha)) / (2.0 * h);
        j.col(1) = (eval(r, alpha + h) - eval(r, alpha - h)) / (2.0 * h);
        j.col(2) =
            (eval(r, alpha + h * kImagUnit) - eval(r, alpha - h * kImagUnit)) / (2.0 * h);
        const Eigen::Vector3d full = j.colPivHouseholderQr().solve(-res);
        // Damped Gauss-Newton: halve the step until it improves and stays in
        // the chart domain.
        double scale = 1.0;
        bool moved = false;
        for (int cut = 0; cut < 12; ++cut, scale *= 0.5) {
            const double r_try = r + scale * full(0);
            const Complex alpha_try = alpha + scale * Complex(full(1), full(2));
            if (std::abs(alpha_try) >= 0.995) continue;
            const double res_try = residual(r_try, alpha_try).norm();
            if (res_try < best) {
                r = r_try;
                alpha = alpha_try;
                best = res_try;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (best < tol) return m_from_chart(r, alpha);
    return std::nullopt;
}

}  // namespace symbidisc
