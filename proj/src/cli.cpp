#include "symbidisc/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symbidisc/action.hpp"
#include "symbidisc/bidisc.hpp"
#include "symbidisc/bundles.hpp"
#include "symbidisc/flat_coords.hpp"
#include "symbidisc/lambda_builder.hpp"
#include "symbidisc/mobius.hpp"
#include "symbidisc/royal_manifold.hpp"
#include "symbidisc/symmetry.hpp"
#include "symbidisc/synchrony.hpp"
#include "symbidisc/verify.hpp"

namespace symbidisc::cli {

namespace {

using json = nlohmann::ordered_json;

json cpx(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json point(const GPoint& s) { return json::array({cpx(s.s1), cpx(s.s2)}); }

struct GlobalOptions {
    double tol = Tolerances{}.eq_tol;
    double fd_step = 1e-4;  // chart sweeps favour the coarser PDE step
    unsigned seed = 20240901;
    bool json_lines = true;  // output is always JSON lines; kept as a flag
};

void emit(std::ostream& out, json line) { out << line.dump() << '\n'; }

json result_line(const std::string& op, json input, json output, json residuals,
                 json pass) {
    return json{{"op", op},
                {"input", std::move(input)},
                {"output", std::move(output)},
                {"residuals", std::move(residuals)},
                {"pass", std::move(pass)}};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ','))
        if (!token.empty()) values.push_back(parse_complex(token));
    return values;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> values;
    for (const Complex& c : parse_complex_list(text)) values.push_back(c.real());
    return values;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::Interior: return "Interior";
        case Membership::Boundary: return "Boundary";
        default: return "Outside";
    }
}

int cmd_membership(std::ostream& out, const GlobalOptions& opts, Complex s1, Complex s2) {
    const GPoint s{s1, s2};
    const Membership cls = classify_membership(s, opts.tol);
    const auto [z, w] = roots(s);
    emit(out, result_line("membership", json{{"s1", cpx(s1)}, {"s2", cpx(s2)}},
                          json{{"class", membership_name(cls)},
                               {"roots", json::array({cpx(z), cpx(w)})}},
                          json::object(), cls == Membership::Interior));
    return 0;
}

int cmd_orbit(std::ostream& out, Complex s1, Complex s2, int grid) {
    const GPoint s{s1, s2};
    if (!is_interior(s)) throw CLI::ValidationError("orbit: point must be interior to G");
    emit(out, result_line("orbit", json{{"s1", cpx(s1)}, {"s2", cpx(s2)}, {"grid", grid}},
                          json{{"stabilizer", is_royal(s) ? "Infinite" : "2"}},
                          json::object(), nullptr));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < grid; ++i) {
        const double r = -std::numbers::pi + two_pi * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double rho = 0.9 * j / grid;
            const int arcs = j == 0 ? 1 : grid;
            for (int k = 0; k < arcs; ++k) {
                const Complex alpha = std::polar(rho, two_pi * k / arcs);
                emit(out, json{{"op", "orbit-sample"},
                               {"r", r},
                               {"alpha", cpx(alpha)},
                               {"point", point(gamma(m_from_chart(r, alpha), s))}});
            }
        }
    }
    return 0;
}

int cmd_geodesic(std::ostream& out, Complex beta, int samples) {
    if (std::abs(beta) >= 1.0)
        throw CLI::ValidationError("geodesic: |beta| must be < 1");
    const FlatLeaf leaf{beta};
    const RoyalIntersection meet = royal_intersection(leaf);
    emit(out, result_line("geodesic", json{{"beta", cpx(beta)}, {"samples", samples}},
                          json{{"royal_point", point(meet.point)}, {"z0", cpx(meet.z0)}},
                          json::object(), nullptr));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < samples; ++i) {
        const double rho = 0.95 * (i + 0.5) / samples;
        const Complex z = std::polar(rho, two_pi * i * 0.381966011250105);
        const GPoint p = leaf_point(leaf, z);
        emit(out, json{{"op", "geodesic-sample"},
                       {"z", cpx(z)},
                       {"point", point(p)},
                       {"C", pseudo_param(p)}});
    }
    return 0;
}

int cmd_sharp(std::ostream& out, const GlobalOptions& opts, Complex s1, Complex s2) {
    const GPoint s{s1, s2};
    if (!is_interior(s)) throw CLI::ValidationError("sharp: point must be interior to G");
    const ComplexLine sharp = sharp_closed(s);
    const ComplexLine flat = flat_direction(s);
    const double numeric_gap = projective_distance(sharp, sharp_numeric(s));
    emit(out, result_line(
                  "sharp", json{{"s1", cpx(s1)}, {"s2", cpx(s2)}},
                  json{{"sharp", json::array({cpx(sharp.direction(0)), cpx(sharp.direction(1))})},
                       {"flat", json::array({cpx(flat.direction(0)), cpx(flat.direction(1))})},
                       {"C", pseudo_param(s)},
                       {"P", poincare_param(s)},
                       {"direct_sum_det", direct_sum_check(s)}},
                  json{{"closed_vs_numeric", numeric_gap}}, numeric_gap < 10.0 * opts.tol));
    return numeric_gap < 10.0 * opts.tol ? 0 : 1;
}

int cmd_synchrony(std::ostream& out, Complex alpha, Complex eta) {
    if (std::abs(alpha) >= 1.0)
        throw CLI::ValidationError("synchrony: |alpha| must be < 1");
    const Complex unit = eta / std::abs(eta);
    const SynchronyReport report = royal_eigencheck(alpha, unit);
    std::vector<Complex> grid;
    for (int i = 0; i < 200; ++i)
        grid.push_back(std::polar(0.85 * (i % 20 + 0.5) / 20.0, 0.81 * i));
    const double double_speed = leaf_double_speed_residual(alpha, unit, grid);
    const bool pass = report.valid(1e-7) && double_speed < 1e-9;
    emit(out, result_line("synchrony", json{{"alpha", cpx(alpha)}, {"eta", cpx(unit)}},
                          json{{"royal_eigenvalue", cpx(report.royal_eigenvalue)},
                               {"flat_eigenvalue", cpx(report.flat_eigenvalue)}},
                          json{{"residual_royal", report.residual_royal},
                               {"residual_flat", report.residual_flat},
                               {"double_speed", double_speed}},
                          pass));
    return pass ? 0 : 1;
}

ManifoldInstance instance_by_name(const std::string& name, const std::string& matrix,
                                  Complex eps) {
    if (name == "identity") return make_identity_instance();
    if (name == "linear") {
        const std::vector<Complex> entries = parse_complex_list(matrix);
        if (entries.size() != 4)
            throw CLI::ValidationError("lambda: --matrix needs 4 comma-separated entries");
        Eigen::Matrix2cd a;
        a << entries[0], entries[1], entries[2], entries[3];
        return make_linear_instance(a);
    }
    if (name == "triangular") return make_triangular_instance(eps);
    throw CLI::ValidationError("unknown instance: " + name);
}

int cmd_lambda(std::ostream& out, const GlobalOptions& opts, const std::string& name,
               const std::string& matrix, Complex eps) {
    const ManifoldInstance instance = instance_by_name(name, matrix, eps);
    validate_instance(instance);
    const ConcomitantPair pair = consistent_pair(instance);
    const auto f = [&instance](Complex z) { return instance.forward(GPoint{0.0, z}); };
    const LambdaMap lambda = build_lambda(instance, pair, f);
    const double deviation =
        reconstruction_deviation(lambda, instance.forward, opts.seed, 500);
    const LambdaReport report = verify_lambda(lambda, instance, pair, opts.seed + 1,
                                              120, opts.fd_step);
    const bool pass = report.pass && deviation < 1e-8;
    emit(out, result_line("lambda", json{{"instance", instance.label}},
                          json{{"sup_deviation", deviation}},
                          json{{"holomorphy", report.holomorphy},
                               {"holomorphy_near_royal", report.holomorphy_near_royal},
                               {"equivariance", report.equivariance},
                               {"royal_mapping", report.royal_mapping},
                               {"leaf_mapping", report.leaf_mapping},
                               {"sharp_transport", report.sharp_transport},
                               {"flat_transport", report.flat_transport}},
                          pass));
    return pass ? 0 : 1;
}

FlatChartMap builtin_chart(const std::string& name, unsigned seed) {
    if (name == "identity") return lift([](const GPoint& s) { return s.vec(); }, name);
    if (name == "mobius") {
        const double angle = 0.6 + 1e-4 * (seed % 97);
        const DiscAutomorphism m =
            make_automorphism(std::polar(1.0, angle), Complex(0.3, 0.2));
        return lift([m](const GPoint& s) { return gamma(m, s).vec(); }, name);
    }
    if (name == "triangular") {
        const ManifoldInstance t = make_triangular_instance(0.1);
        return lift([t](const GPoint& s) { return t.forward(s); }, name);
    }
    if (name == "antiholomorphic")
        return {[](Complex beta, Complex z) {
                    return Vec2c(beta + std::conj(beta) * z + 0.05 * std::conj(z), z);
                },
                name};
    throw CLI::ValidationError("unknown builtin chart: " + name);
}

int cmd_pde_check(std::ostream& out, const GlobalOptions& opts,
                  const std::string& builtin, const std::string& grid_file) {
    PdeReport report;
    json input;
    if (!grid_file.empty()) {
        std::ifstream in(grid_file);
        if (!in) throw CLI::ValidationError("pde-check: cannot open " + grid_file);
        report = pde_check_samples(read_grid_csv(in), opts.fd_step);
        input = json{{"grid", grid_file}, {"fd_step", opts.fd_step}};
    } else {
        const FlatChartMap xi = builtin_chart(builtin, opts.seed);
        report = pde_check(xi, 5, 0.8, opts.fd_step);
        input = json{{"builtin", builtin}, {"fd_step", opts.fd_step}};
    }
    emit(out, result_line("pde-check", input, json{{"points", report.points}},
                          json{{"leaf_transport", report.residual_leaf_transport},
                               {"z_holomorphy", report.residual_z_holomorphy}},
                          report.pass));
    return report.pass ? 0 : 1;
}

const char* class_name(FixedClass c) {
    switch (c) {
        case FixedClass::IsolatedFixed: return "IsolatedFixed";
        case FixedClass::NonIsolatedFixed: return "NonIsolatedFixed";
        default: return "NotFixed";
    }
}

int cmd_symmetry(std::ostream& out, const std::string& domain, double q,
                 const std::string& z_text, const std::string& p_list) {
    if (domain == "annulus") {
        const Complex z = parse_complex(z_text.empty() ? "1" : z_text);
        const AnnulusSymmetryResult res = annulus_symmetry_point(AnnulusParams{q}, z);
        json output{{"is_symmetry_point", res.is_symmetry_point}};
        if (res.is_symmetry_point) {
            output["involution"] = "zeta -> z^2/zeta";
            output["fixed_points"] = json::array({cpx(res.fixed_plus), cpx(res.fixed_minus)});
        }
        emit(out, result_line("symmetry", json{{"domain", domain}, {"q", q}, {"z", cpx(z)}},
                              output, json::object(), nullptr));
        return 0;
    }
    std::vector<double> ps = parse_real_list(p_list);
    if (ps.empty())
        for (int k = 1; k <= 9; ++k) ps.push_back(0.1 * k);
    const SymmetrySweepReport report =
        domain == "g" ? no_symmetry_sweep_g(ps) : no_symmetry_sweep_tetra(ps);
    json entries = json::array();
    for (const SweepEntry& e : report.entries)
        entries.push_back(json{{"candidate", e.candidate}, {"p", e.p},
                               {"class", class_name(e.cls)}});
    emit(out, result_line("symmetry", json{{"domain", domain}, {"p_values", ps}},
                          json{{"entries", entries},
                               {"point_of_symmetry_found", report.point_of_symmetry_found}},
                          json::object(), !report.point_of_symmetry_found));
    return report.point_of_symmetry_found ? 1 : 0;
}

int cmd_verify(std::ostream& out, const GlobalOptions& opts, const std::string& suite) {
    const std::vector<CheckResult> results = run_suite(suite, opts.seed);
    if (results.empty()) throw CLI::ValidationError("verify: unknown suite " + suite);
    bool all_pass = true;
    for (const CheckResult& c : results) {
        json stats;
        for (const auto& [name, value] : c.stats) stats[name] = value;
        emit(out, result_line("verify",
                              json{{"suite", c.suite}, {"criterion", c.criterion}},
                              json{{"name", c.name}}, stats, c.pass));
        all_pass = all_pass && c.pass;
    }
    emit(out, result_line("verify-summary", json{{"suite", suite}},
                          json{{"checks", results.size()}}, json::object(), all_pass));
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical geometry of the symmetrized bidisc"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_option("--tol", opts.tol, "equality tolerance")->envname("SYMBIDISC_TOL");
    app.add_option("--fd-step", opts.fd_step, "finite-difference step")
        ->envname("SYMBIDISC_FD_STEP");
    app.add_option("--seed", opts.seed, "seed for sampled sweeps")
        ->envname("SYMBIDISC_SEED");
    app.add_flag("--json", opts.json_lines, "emit JSON lines (always on)")
        ->envname("SYMBIDISC_JSON");

    std::string s1_text = "0", s2_text = "0";
    auto* membership = app.add_subcommand("membership", "classify a point against G")->fallthrough();
    membership->add_option("s1", s1_text)->required();
    membership->add_option("s2", s2_text)->required();

    std::string orbit_s1 = "0", orbit_s2 = "0";
    int orbit_grid = 8;
    auto* orbit = app.add_subcommand("orbit", "sample the orbit of a point")->fallthrough();
    orbit->add_option("s1", orbit_s1)->required();
    orbit->add_option("s2", orbit_s2)->required();
    orbit->add_option("--grid", orbit_grid, "chart grid size");

    std::string beta_text = "0";
    int geo_samples = 32;
    auto* geodesic = app.add_subcommand("geodesic", "sample a flat geodesic")->fallthrough();
    geodesic->add_option("--beta", beta_text, "leaf parameter")->required();
    geodesic->add_option("--samples", geo_samples, "sample count");

    std::string sharp_s1 = "0", sharp_s2 = "0";
    auto* sharp = app.add_subcommand("sharp", "sharp/flat directions and parameters")->fallthrough();
    sharp->add_option("s1", sharp_s1)->required();
    sharp->add_option("s2", sharp_s2)->required();

    std::string sync_alpha = "0", sync_eta = "1";
    auto* synchrony = app.add_subcommand("synchrony", "eigenvalue and leaf synchrony checks")->fallthrough();
    synchrony->add_option("--alpha", sync_alpha, "fixed point on the disc");
    synchrony->add_option("--eta", sync_eta, "rotation multiplier");

    std::string instance_name = "identity", matrix_text, eps_text = "0.1";
    auto* lambda = app.add_subcommand("lambda", "build and verify the reconstruction map")->fallthrough();
    lambda->add_option("--instance", instance_name, "identity|linear|triangular");
    lambda->add_option("--matrix", matrix_text, "4 comma-separated complex entries");
    lambda->add_option("--eps", eps_text, "triangular perturbation");

    std::string builtin = "identity", grid_file;
    auto* pde = app.add_subcommand("pde-check", "flat-coordinate PDE residuals")->fallthrough();
    pde->add_option("--builtin", builtin, "identity|mobius|triangular|antiholomorphic");
    pde->add_option("--grid", grid_file, "CSV grid file (beta,z,xi1,xi2)");

    std::string domain = "g", z_text, p_list;
    double annulus_q = 0.5;
    auto* symmetry = app.add_subcommand("symmetry", "points-of-symmetry analysis")->fallthrough();
    symmetry->add_option("--domain", domain, "annulus|g|tetrablock");
    symmetry->add_option("--q", annulus_q, "annulus inner radius");
    symmetry->add_option("--z", z_text, "annulus probe point");
    symmetry->add_option("--p-list", p_list, "comma-separated representatives");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
    verify->add_option("--suite", suite, "all|acceptance|invariants|<module>");

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("symbidisc");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (membership->parsed())
            return cmd_membership(out, opts, parse_complex(s1_text), parse_complex(s2_text));
        if (orbit->parsed())
            return cmd_orbit(out, parse_complex(orbit_s1), parse_complex(orbit_s2), orbit_grid);
        if (geodesic->parsed())
            return cmd_geodesic(out, parse_complex(beta_text), geo_samples);
        if (sharp->parsed())
            return cmd_sharp(out, opts, parse_complex(sharp_s1), parse_complex(sharp_s2));
        if (synchrony->parsed())
            return cmd_synchrony(out, parse_complex(sync_alpha), parse_complex(sync_eta));
        if (lambda->parsed())
            return cmd_lambda(out, opts, instance_name, matrix_text, parse_complex(eps_text));
        if (pde->parsed()) return cmd_pde_check(out, opts, builtin, grid_file);
        if (symmetry->parsed())
            return cmd_symmetry(out, domain, annulus_q, z_text, p_list);
        if (verify->parsed()) return cmd_verify(out, opts, suite);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace symbidisc::cli
