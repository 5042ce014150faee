#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace symbidisc {

using Complex = std::complex<double>;
using Vec2c = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4d;

constexpr Complex kImagUnit{0.0, 1.0};

/// Tolerance policy shared by all modules.  eq_tol gates equality checks,
/// fd_step is the default central-difference step, rank_tol is the relative
/// singular-value cutoff for numerical ranks.
struct Tolerances {
    double eq_tol = 1e-9;
    double fd_step = 1e-5;
    double rank_tol = 1e-9;
};

// C^2 is identified with R^4 as (Re s1, Im s1, Re s2, Im s2) throughout.
Vec4 to_real(const Vec2c& v);
Vec2c to_complex(const Vec4& v);

// Multiplication by i in the R^4 picture (block rotation on each pair).
Vec4 times_i(const Vec4& v);

/// A real-linear subspace of C^2 ~ R^4, stored as an orthonormal basis.
struct RealSubspace {
    Eigen::Matrix<double, 4, Eigen::Dynamic> basis;

    int dim() const { return static_cast<int>(basis.cols()); }
    Vec4 project(const Vec4& v) const;
    bool contains(const Vec4& v, double tol = 1e-10) const;
};

/// Orthonormal basis of the real span of the given C^2 vectors.  The
/// dimension is the numerical rank at the relative cutoff rank_tol.
RealSubspace real_span(const std::vector<Vec2c>& vectors, double rank_tol = 1e-9);
RealSubspace real_span_r4(const Eigen::Matrix<double, 4, Eigen::Dynamic>& columns,
                          double rank_tol = 1e-9);

/// U cap V via the nullspace of the stacked orthogonal-complement projectors.
RealSubspace intersect(const RealSubspace& u, const RealSubspace& v,
                       double rank_tol = 1e-9);

RealSubspace multiply_i(const RealSubspace& u);

bool subspaces_equal(const RealSubspace& u, const RealSubspace& v, double tol = 1e-9);

/// A complex line in C^2, normalized to unit norm with the first
/// (numerically) nonzero component real positive, so the projective
/// representative is unique.
struct ComplexLine {
    Vec2c direction;
};

ComplexLine complex_line(const Vec2c& v);

/// || v1 - <v2,v1> v2 || for unit representatives; vanishes iff same line.
double projective_distance(const ComplexLine& a, const ComplexLine& b);
bool complex_lines_equal(const ComplexLine& a, const ComplexLine& b, double tol);

using MapC2 = std::function<Vec2c(const Vec2c&)>;

/// Central-difference derivative of a map C^2 -> C^2 at s.  `real` holds the
/// full 4x4 real Jacobian; `complex_form` is present when the Cauchy-Riemann
/// residual is below 10*step^2, i.e. the map looks holomorphic at s.
struct NumericJacobian {
    Eigen::Matrix4d real;
    std::optional<Eigen::Matrix2cd> complex_form;
    double cr_residual = 0.0;
};

NumericJacobian numeric_jacobian(const MapC2& f, const Vec2c& s, double step = 1e-5);

/// Max over the two complex input directions of the defect between the
/// x-direction and y-direction difference quotients; ~0 for holomorphic f.
double holomorphy_residual(const MapC2& f, const Vec2c& s, double step = 1e-5);

/// Roots of a*x^2 + b*x + c with complex coefficients.  Degenerate leading
/// coefficients degrade to the linear/constant cases (0 or 1 root).  The
/// larger-magnitude root is computed from -(b + sign*sqrt(disc))/2 and the
/// other from the constant-term cofactor.
std::vector<Complex> solve_quadratic(Complex a, Complex b, Complex c);

}  // namespace symbidisc
