#pragma once

#include <functional>

#include "symbidisc/royal_manifold.hpp"

namespace symbidisc {

/// alpha(s) = -beta(s) / (1 + sqrt(1 - |beta(s)|^2)); the Blaschke parameter
/// moving s onto the central leaf F^0.  Satisfies beta = -2 alpha/(1+|alpha|^2).
Complex alpha_of(const GPoint& s);

/// L(s) = gamma_{B_{alpha(s)}}^{-1}(s) = (0, (s2 + a s1 + a^2)/(1 + conj(a) s1
/// + conj(a)^2 s2)) with a = alpha(s); lands on the central leaf.
GPoint L_of(const GPoint& s);

using LambdaMap = std::function<Point2(const GPoint&)>;

/// Builds the candidate biholomorphism from a concomitant pair and a fiber
/// embedding, with base normalization z0 = 0, g(z) = (0, z):
/// Lambda(s) = Theta(B_{alpha(s)})(f(z)) where z is the leaf coordinate of
/// L(s).  f must embed the disc onto the leaf of d(0) with f(0) = d(0);
/// violations are detected by pullback and rejected.
LambdaMap build_lambda(const ManifoldInstance& instance, const ConcomitantPair& pair,
                       const std::function<Point2(Complex)>& f);

struct LambdaReport {
    double holomorphy = 0.0;             // max residual at generic interior samples
    double holomorphy_near_royal = 0.0;  // recorded separately; FD degrades there
    double injectivity_defect = 0.0;     // 1.0 on a sampled collision
    double equivariance = 0.0;           // Lambda o gamma_u vs Theta(u) o Lambda
    double royal_mapping = 0.0;          // Lambda o R vs d
    double leaf_mapping = 0.0;           // leaves land in the matching fibers
    double sharp_transport = 0.0;        // Lambda'(s) s-sharp vs (Lambda s)-sharp
    double flat_transport = 0.0;
    bool pass = false;
};

LambdaReport verify_lambda(const LambdaMap& lambda, const ManifoldInstance& instance,
                           const ConcomitantPair& pair, unsigned seed = 7,
                           int samples = 120, double fd_step = 1e-4);

/// Sup-norm deviation of the built map from a reference over seeded samples.
double reconstruction_deviation(const LambdaMap& lambda,
                                const std::function<Point2(const GPoint&)>& reference,
                                unsigned seed = 11, int samples = 500);

}  // namespace symbidisc
