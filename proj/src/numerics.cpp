#include "symbidisc/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace symbidisc {

Vec4 to_real(const Vec2c& v) {
    return Vec4(v(0).real(), v(0).imag(), v(1).real(), v(1).imag());
}

Vec2c to_complex(const Vec4& v) {
    return Vec2c(Complex(v(0), v(1)), Complex(v(2), v(3)));
}

Vec4 times_i(const Vec4& v) {
    return Vec4(-v(1), v(0), -v(3), v(2));
}

Vec4 RealSubspace::project(const Vec4& v) const {
    if (dim() == 0) return Vec4::Zero();
    return basis * (basis.transpose() * v);
}

bool RealSubspace::contains(const Vec4& v, double tol) const {
    const double n = v.norm();
    if (n == 0.0) return true;
    return (v - project(v)).norm() <= tol * n;
}

RealSubspace real_span_r4(const Eigen::Matrix<double, 4, Eigen::Dynamic>& columns,
                          double rank_tol) {
    RealSubspace out;
    if (columns.cols() == 0) {
        out.basis.resize(4, 0);
        return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * smax) ++rank;
    out.basis = svd.matrixU().leftCols(rank);
    return out;
}

RealSubspace real_span(const std::vector<Vec2c>& vectors, double rank_tol) {
    if (vectors.empty()) throw std::invalid_argument("real_span: empty input");
    Eigen::Matrix<double, 4, Eigen::Dynamic> cols(4, vectors.size());
    for (size_t j = 0; j < vectors.size(); ++j) cols.col(j) = to_real(vectors[j]);
    return real_span_r4(cols, rank_tol);
}

RealSubspace intersect(const RealSubspace& u, const RealSubspace& v, double rank_tol) {
    RealSubspace out;
    if (u.dim() == 0 || v.dim() == 0) {
        out.basis.resize(4, 0);
        return out;
    }
    const Eigen::Matrix4d pu =
        Eigen::Matrix4d::Identity() - u.basis * u.basis.transpose();
    const Eigen::Matrix4d pv =
        Eigen::Matrix4d::Identity() - v.basis * v.basis.transpose();
    Eigen::Matrix<double, 8, 4> stacked;
    stacked << pu, pv;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    // x is in the intersection iff both complement projections kill it, i.e.
    // x lies in the nullspace of the stacked matrix.  Singular values of the
    // stack are bounded by sqrt(2), so an absolute-ish cutoff is safe here.
    const double cutoff = rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= cutoff) ++null_dim;
    null_dim += 4 - static_cast<int>(sv.size());
    out.basis = svd.matrixV().rightCols(null_dim);
    return out;
}

RealSubspace multiply_i(const RealSubspace& u) {
    RealSubspace out;
    out.basis.resize(4, u.dim());
    for (int j = 0; j < u.dim(); ++j) out.basis.col(j) = times_i(u.basis.col(j));
    return out;
}

bool subspaces_equal(const RealSubspace& u, const RealSubspace& v, double tol) {
    if (u.dim() != v.dim()) return false;
    for (int j = 0; j < u.dim(); ++j)
        if (!v.contains(u.basis.col(j), tol)) return false;
    return true;
}

ComplexLine complex_line(const Vec2c& v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("complex_line: zero vector");
    Vec2c unit = v / n;
    const int pivot = std::abs(unit(0)) > 1e-12 ? 0 : 1;
    const Complex phase = std::conj(unit(pivot)) / std::abs(unit(pivot));
    return ComplexLine{unit * phase};
}

double projective_distance(const ComplexLine& a, const ComplexLine& b) {
    const Complex overlap = b.direction.dot(a.direction);  // conjugates b
    return (a.direction - overlap * b.direction).norm();
}

bool complex_lines_equal(const ComplexLine& a, const ComplexLine& b, double tol) {
    return projective_distance(a, b) < tol;
}

NumericJacobian numeric_jacobian(const MapC2& f, const Vec2c& s, double step) {
    NumericJacobian out;
    const Vec4 base = to_real(s);
    Eigen::Matrix<Complex, 2, 4> dcols;  // derivative along x1, y1, x2, y2
    for (int j = 0; j < 4; ++j) {
        Vec4 hi = base, lo = base;
        hi(j) += step;
        lo(j) -= step;
        const Vec2c diff = (f(to_complex(hi)) - f(to_complex(lo))) / (2.0 * step);
        dcols.col(j) = diff;
        out.real(0, j) = diff(0).real();
        out.real(1, j) = diff(0).imag();
        out.real(2, j) = diff(1).real();
        out.real(3, j) = diff(1).imag();
    }
    // Holomorphic at s iff d/dy = i d/dx in both input coordinates.
    const double cr1 = (dcols.col(1) - kImagUnit * dcols.col(0)).norm();
    const double cr2 = (dcols.col(3) - kImagUnit * dcols.col(2)).norm();
    out.cr_residual = std::max(cr1, cr2);
    if (out.cr_residual < 10.0 * step * step) {
        Eigen::Matrix2cd m;
        m.col(0) = dcols.col(0);
        m.col(1) = dcols.col(2);
        out.complex_form = m;
    }
    return out;
}

double holomorphy_residual(const MapC2& f, const Vec2c& s, double step) {
    double worst = 0.0;
    for (int j = 0; j < 2; ++j) {
        Vec2c er = Vec2c::Zero(), ei = Vec2c::Zero();
        er(j) = Complex(step, 0.0);
        ei(j) = Complex(0.0, step);
        const Vec2c dx = (f(s + er) - f(s - er)) / (2.0 * step);
        const Vec2c dy = (f(s + ei) - f(s - ei)) / (2.0 * step);
        // dx - dy/i = dx + i dy = twice the conjugate-Wirtinger derivative.
        worst = std::max(worst, (dx + kImagUnit * dy).norm());
    }
    return worst;
}

std::vector<Complex> solve_quadratic(Complex a, Complex b, Complex c) {
    const double scale = std::max({std::abs(b), std::abs(c), 1.0});
    if (std::abs(a) < 1e-14 * scale) {
        if (std::abs(b) < 1e-14 * scale) return {};
        return {-c / b};
    }
    const Complex disc = b * b - 4.0 * a * c;
    Complex root = std::sqrt(disc);
    if (std::real(std::conj(b) * root) < 0.0) root = -root;
    const Complex q = -0.5 * (b + root);
    if (std::abs(q) == 0.0) return {Complex(0.0), -b / a};
    return {q / a, c / q};
}

}  // namespace symbidisc
