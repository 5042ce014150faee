#include "symbidisc/flat_coords.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symbidisc {

namespace {

using XiMap = std::function<Vec2c(Complex, Complex)>;

// Wirtinger derivatives by central differences in the real coordinates.
struct WirtingerPair {
    Vec2c holo;  // d/d w
    Vec2c anti;  // d/d conj(w)
};

WirtingerPair wirtinger(const std::function<Vec2c(Complex)>& g, Complex w, double step) {
    const Vec2c dx = (g(w + step) - g(w - step)) / (2.0 * step);
    const Vec2c dy =
        (g(w + step * kImagUnit) - g(w - step * kImagUnit)) / (2.0 * step);
    return {0.5 * (dx - kImagUnit * dy), 0.5 * (dx + kImagUnit * dy)};
}

}  // namespace

FlatChartMap lift(const DomainMap& f, std::string label) {
    return {[f](Complex beta, Complex z) {
                return f(from_flat_coords({beta, z}));
            },
            std::move(label)};
}

DomainMap descend(const FlatChartMap& xi) {
    return [xi](const GPoint& s) {
        const FlatCoordinates fc = flat_coords(s);
        return xi.sampler(fc.beta, fc.z);
    };
}

double ChainRuleResiduals::max() const {
    return std::max(std::max(d_beta, d_beta_conj), std::max(d_z, d_z_conj));
}

ChainRuleResiduals chain_rule_residuals(const DomainMap& f, Complex beta, Complex z,
                                        double step) {
    const XiMap xi = lift(f).sampler;
    const auto d_in_beta =
        wirtinger([&](Complex b) { return xi(b, z); }, beta, step);
    const auto d_in_z = wirtinger([&](Complex y) { return xi(beta, y); }, z, step);

    const GPoint s = from_flat_coords({beta, z});
    const auto f_in_s = wirtinger(
        [&](Complex u) { return f(GPoint{u, s.s2}); }, s.s1, step);
    const auto f_in_p = wirtinger(
        [&](Complex u) { return f(GPoint{s.s1, u}); }, s.s2, step);

    ChainRuleResiduals out;
    out.d_beta = (d_in_beta.holo - (f_in_s.holo + std::conj(z) * f_in_s.anti)).norm();
    out.d_beta_conj = (d_in_beta.anti - (z * f_in_s.holo + f_in_s.anti)).norm();
    out.d_z = (d_in_z.holo - (std::conj(beta) * f_in_s.holo + f_in_p.holo)).norm();
    out.d_z_conj = (d_in_z.anti - (beta * f_in_s.anti + f_in_p.anti)).norm();
    return out;
}

PdeReport pde_check(const FlatChartMap& xi, int n, double radius, double step,
                    double tol) {
    if (radius + 2.0 * step >= 1.0)
        throw std::invalid_argument("pde_check: grid must stay 2 steps inside the bidisc");
    PdeReport report;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex beta = std::polar(radius * (i + 0.5) / n, two_pi * j / n);
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    const Complex z =
                        std::polar(radius * (k + 0.5) / n, two_pi * (l + 0.25) / n);
                    const auto d_beta = wirtinger(
                        [&](Complex b) { return xi.sampler(b, z); }, beta, step);
                    const auto d_z = wirtinger(
                        [&](Complex y) { return xi.sampler(beta, y); }, z, step);
                    report.residual_leaf_transport =
                        std::max(report.residual_leaf_transport,
                                 (d_beta.anti - z * d_beta.holo).norm());
                    report.residual_z_holomorphy =
                        std::max(report.residual_z_holomorphy, d_z.anti.norm());
                    ++report.points;
                }
            }
        }
    }
    report.pass = report.residual_leaf_transport < tol &&
                  report.residual_z_holomorphy < tol;
    return report;
}

ReconstructionReport reconstruct_and_verify(const FlatChartMap& xi, int samples,
                                            double step, double tol) {
    const DomainMap f = descend(xi);
    const MapC2 as_map = [&f](const Vec2c& v) { return f(GPoint::from(v)); };
    ReconstructionReport report;
    for (int i = 0; i < samples; ++i) {
        const Complex beta = std::polar(0.7 * (i % 5 + 1) / 6.0, 0.9 * i);
        const Complex z = std::polar(0.7 * (i % 7 + 1) / 8.0, 1.7 * i + 0.4);
        const GPoint s = from_flat_coords({beta, z});
        report.holomorphy =
            std::max(report.holomorphy, holomorphy_residual(as_map, s.vec(), step));
    }
    report.pass = report.holomorphy < tol;
    return report;
}

Complex parse_complex(const std::string& token) {
    // Accepts "a", "bi", "a+bi", "a-bi" with floating-point a, b.
    std::string text = token;
    if (!text.empty() && text.back() == 'i') {
        text.pop_back();
        // Split at the sign that separates real and imaginary parts.
        for (size_t k = text.size(); k-- > 1;) {
            const char c = text[k];
            if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
                const double re = std::stod(text.substr(0, k));
                const std::string imag_text = text.substr(k);
                const double im = imag_text == "+" ? 1.0
                                  : imag_text == "-" ? -1.0
                                                     : std::stod(imag_text);
                return {re, im};
            }
        }
        if (text.empty() || text == "+") return {0.0, 1.0};
        if (text == "-") return {0.0, -1.0};
        return {0.0, std::stod(text)};
    }
    return {std::stod(text), 0.0};
}

std::string format_complex(Complex value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", value.real(), value.imag());
    return buffer;
}

std::vector<GridSample> read_grid_csv(std::istream& in) {
    std::vector<GridSample> samples;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("grid csv: empty file");
    if (line.find("beta") == std::string::npos)
        throw std::runtime_error("grid csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::array<std::string, 4> cell;
        for (auto& c : cell)
            if (!std::getline(row, c, ','))
                throw std::runtime_error("grid csv: short row");
        samples.push_back({parse_complex(cell[0]), parse_complex(cell[1]),
                           Vec2c(parse_complex(cell[2]), parse_complex(cell[3]))});
    }
    return samples;
}

void write_grid_csv(std::ostream& out, const std::vector<GridSample>& samples) {
    out << "beta,z,xi1,xi2\n";
    for (const GridSample& s : samples)
        out << format_complex(s.beta) << ',' << format_complex(s.z) << ','
            << format_complex(s.xi(0)) << ',' << format_complex(s.xi(1)) << '\n';
}

PdeReport pde_check_samples(const std::vector<GridSample>& samples, double step,
                            double tol) {
    using Key = std::array<long long, 4>;
    auto key_of = [step](Complex beta, Complex z) -> Key {
        auto q = [step](double x) { return std::llround(x / (0.5 * step)); };
        return {q(beta.real()), q(beta.imag()), q(z.real()), q(z.imag())};
    };
    std::map<Key, Vec2c> table;
    for (const GridSample& s : samples) table[key_of(s.beta, s.z)] = s.xi;

    PdeReport report;
    for (const GridSample& s : samples) {
        auto fetch = [&](Complex beta, Complex z) -> const Vec2c* {
            const auto it = table.find(key_of(beta, z));
            return it == table.end() ? nullptr : &it->second;
        };
        const Vec2c* bp = fetch(s.beta + step, s.z);
        const Vec2c* bm = fetch(s.beta - step, s.z);
        const Vec2c* bip = fetch(s.beta + step * kImagUnit, s.z);
        const Vec2c* bim = fetch(s.beta - step * kImagUnit, s.z);
        const Vec2c* zp = fetch(s.beta, s.z + step);
        const Vec2c* zm = fetch(s.beta, s.z - step);
        const Vec2c* zip = fetch(s.beta, s.z + step * kImagUnit);
        const Vec2c* zim = fetch(s.beta, s.z - step * kImagUnit);
        if (!(bp && bm && bip && bim && zp && zm && zip && zim)) continue;
        const Vec2c dbx = (*bp - *bm) / (2.0 * step);
        const Vec2c dby = (*bip - *bim) / (2.0 * step);
        const Vec2c dzx = (*zp - *zm) / (2.0 * step);
        const Vec2c dzy = (*zip - *zim) / (2.0 * step);
        const Vec2c d_beta = 0.5 * (dbx - kImagUnit * dby);
        const Vec2c d_beta_conj = 0.5 * (dbx + kImagUnit * dby);
        const Vec2c d_z_conj = 0.5 * (dzx + kImagUnit * dzy);
        report.residual_leaf_transport = std::max(
            report.residual_leaf_transport, (d_beta_conj - s.z * d_beta).norm());
        report.residual_z_holomorphy =
            std::max(report.residual_z_holomorphy, d_z_conj.norm());
        ++report.points;
    }
    if (report.points == 0)
        throw std::runtime_error("pde_check_samples: no complete stencil in the table");
    report.pass = report.residual_leaf_transport < tol &&
                  report.residual_z_holomorphy < tol;
    return report;
}

}  // namespace symbidisc
