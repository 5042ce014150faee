#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "symbidisc/bidisc.hpp"

namespace symbidisc {

using DomainMap = std::function<Vec2c(const GPoint&)>;

/// A map Xi = (xi1, xi2) on the bidisc of flat coordinates (beta, z).
struct FlatChartMap {
    std::function<Vec2c(Complex beta, Complex z)> sampler;
    std::string label;
};

/// Xi = F o eta, where eta(beta, z) = (beta + conj(beta) z, z).
FlatChartMap lift(const DomainMap& f, std::string label = "");

/// F = Xi o eta^{-1}, evaluated through the flat coordinates of s.
DomainMap descend(const FlatChartMap& xi);

/// Defects of the four chain-rule identities linking the Wirtinger
/// derivatives of xi = F o eta to those of F.
struct ChainRuleResiduals {
    double d_beta = 0.0;       // d xi/d beta        = f_s + conj(z) f_sbar
    double d_beta_conj = 0.0;  // d xi/d conj(beta)  = z f_s + f_sbar
    double d_z = 0.0;          // d xi/d z           = conj(beta) f_s + f_p
    double d_z_conj = 0.0;     // d xi/d conj(z)     = beta f_sbar + f_pbar

    double max() const;
};

ChainRuleResiduals chain_rule_residuals(const DomainMap& f, Complex beta, Complex z,
                                        double step = 1e-4);

struct PdeReport {
    double residual_leaf_transport = 0.0;  // d xi/d conj(beta) - z d xi/d beta
    double residual_z_holomorphy = 0.0;    // d xi/d conj(z)
    int points = 0;
    bool pass = false;
};

/// Checks the two defining equations of the flat-coordinate characterization
/// on an interior polar grid (radius below 1 - 2*step).
PdeReport pde_check(const FlatChartMap& xi, int n = 6, double radius = 0.8,
                    double step = 1e-4, double tol = 1e-5);

struct ReconstructionReport {
    double holomorphy = 0.0;
    bool pass = false;
};

/// Descends a chart map passing pde_check and verifies the reconstructed
/// domain map is holomorphic at interior samples.
ReconstructionReport reconstruct_and_verify(const FlatChartMap& xi, int samples = 40,
                                            double step = 1e-4, double tol = 1e-5);

// --- grid-file interface -------------------------------------------------

struct GridSample {
    Complex beta, z;
    Vec2c xi;
};

/// CSV with header "beta,z,xi1,xi2"; complex cells as re+imi pairs.
std::vector<GridSample> read_grid_csv(std::istream& in);
void write_grid_csv(std::ostream& out, const std::vector<GridSample>& samples);

/// Runs the PDE residuals on tabulated samples.  A sample is evaluated when
/// all eight of its central-difference stencil neighbours at spacing `step`
/// are present in the table.
PdeReport pde_check_samples(const std::vector<GridSample>& samples, double step,
                            double tol = 1e-5);

Complex parse_complex(const std::string& token);
std::string format_complex(Complex value);

}  // namespace symbidisc
