#pragma once

#include <cstdint>
#include <random>

#include "symbidisc/bidisc.hpp"
#include "symbidisc/mobius.hpp"

namespace symbidisc {

/// Seeded sampler for discs, automorphisms and interior points of G.  All
/// sweeps take explicit seeds so runs are reproducible.
struct Sampler {
    std::mt19937_64 rng;

    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng);
    }

    Complex unit_circle() { return std::polar(1.0, uniform(0.0, 6.283185307179586)); }

    Complex disc(double rmax = 1.0) {
        const double r = rmax * std::sqrt(uniform(0.0, 1.0));
        return std::polar(r, uniform(0.0, 6.283185307179586));
    }

    DiscAutomorphism automorphism(double alpha_max = 0.8) {
        return make_automorphism(unit_circle(), disc(alpha_max));
    }

    GPoint interior_point(double root_max = 0.85) {
        return symmetrize(disc(root_max), disc(root_max));
    }

    /// Interior point whose roots are at least min_gap apart, so the orbit
    /// tangent space has full rank 3 with margin.
    GPoint nonroyal_point(double root_max = 0.85, double min_gap = 0.05) {
        for (;;) {
            const Complex z = disc(root_max), w = disc(root_max);
            if (std::abs(z - w) >= min_gap) return symmetrize(z, w);
        }
    }

    Complex royal_zeta(double rmax = 0.85) { return disc(rmax); }
};

}  // namespace symbidisc
