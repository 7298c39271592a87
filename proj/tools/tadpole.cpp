// Command-line front end: standing waves of the quintic NLS on the tadpole
// graph.  Subcommands construct individual waves, sweep the mass-frequency
// curve, locate the critical frequencies, sample graph profiles, tabulate
// vertex scattering data, compare against the asymptotic laws, and run the
// self-check suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 numerical failure (tolerance not met, no bracket, ...).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tadpole/tadpole.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tadpole;

std::string path_join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_output_dir(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec)
        throw numerical_error("cannot create output directory " +
                              cfg.output_dir + ": " + ec.message());
}

std::vector<std::string> artifact_comments(const RunConfig& cfg) {
    return {
        "config_hash=" + config_hash(cfg),
        "quad_tol=" + fmt_g17(cfg.quad_tol) + " root_tol=" +
            fmt_g17(cfg.root_tol) + " grid_n=" + std::to_string(cfg.grid_n) +
            " L_trunc_factor=" + fmt_g17(cfg.L_trunc_factor),
    };
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// ---------------------------------------------------------------- solve --

struct SolveChecks {
    double period_defect;          // |pi eps^2 - T(U0)| at tightened tolerance
    double boundary_value_defect;  // |U(T) - phi(a)|
    double boundary_slope_defect;  // |2 U'(T) - phi'(a)|
    double nehari_defect;          // B_omega / (3 |Phi|_6^6) - 1
};

SolveChecks run_solve_checks(const WaveSolution& sol,
                             const QuadratureSpec& spec) {
    QuadratureSpec tight = spec;
    tight.tolerance = spec.tolerance / 10.0;
    const double T = ring_half_period(sol);
    const auto ud = profile_exact_d(sol, T);
    const auto sv = soliton_phi(sol.params.a);
    SolveChecks chk;
    chk.period_defect = std::fabs(period_T(sol.params, tight) - T);
    chk.boundary_value_defect = std::fabs(ud[0] - sv.phi);
    chk.boundary_slope_defect = std::fabs(2.0 * ud[1] - sv.dphi);
    chk.nehari_defect = variational_report(sol, spec).nehari_defect;
    return chk;
}

int cmd_solve(const RunConfig& cfg, bool have_omega, double omega,
              bool have_u0, double u0) {
    const QuadratureSpec spec = quadrature_spec(cfg);
    const WaveSolution sol = have_omega
                                 ? solve_from_omega(omega, spec, cfg.root_tol)
                                 : solve_from_U0(u0, spec);
    const SolveChecks chk = run_solve_checks(sol, spec);
    (void)have_u0;

    if (cfg.format == OutputFormat::json) {
        ordered_json j;
        j["U0"] = sol.params.U0;
        j["E"] = sol.params.E;
        j["Uplus"] = sol.params.Uplus;
        j["a"] = sol.params.a;
        j["eps"] = sol.eps;
        j["omega"] = sol.omega;
        j["mu"] = sol.mu;
        j["rho1"] = sol.rho.rho1;
        j["rho2"] = sol.rho.rho2;
        j["rho3"] = sol.rho.rho3;
        j["nu"] = sol.nu;
        j["k"] = sol.k;
        j["checks"] = {{"period_defect", chk.period_defect},
                       {"boundary_value_defect", chk.boundary_value_defect},
                       {"boundary_slope_defect", chk.boundary_slope_defect},
                       {"nehari_defect", chk.nehari_defect}};
        j["config_hash"] = config_hash(cfg);
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("# config_hash=%s\n", config_hash(cfg).c_str());
        std::printf(
            "U0,E,Uplus,a,eps,omega,mu,rho1,rho2,rho3,nu,k,"
            "period_defect,boundary_value_defect,boundary_slope_defect,"
            "nehari_defect\n");
        std::printf(
            "%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
            fmt_g17(sol.params.U0).c_str(), fmt_g17(sol.params.E).c_str(),
            fmt_g17(sol.params.Uplus).c_str(), fmt_g17(sol.params.a).c_str(),
            fmt_g17(sol.eps).c_str(), fmt_g17(sol.omega).c_str(),
            fmt_g17(sol.mu).c_str(), fmt_g17(sol.rho.rho1).c_str(),
            fmt_g17(sol.rho.rho2).c_str(), fmt_g17(sol.rho.rho3).c_str(),
            fmt_g17(sol.nu).c_str(), fmt_g17(sol.k).c_str(),
            fmt_g17(chk.period_defect).c_str(),
            fmt_g17(chk.boundary_value_defect).c_str(),
            fmt_g17(chk.boundary_slope_defect).c_str(),
            fmt_g17(chk.nehari_defect).c_str());
    }
    return 0;
}

// ----------------------------------------------------------- mass-curve --

int cmd_mass_curve(const RunConfig& cfg) {
    const QuadratureSpec spec = quadrature_spec(cfg);
    const int n = cfg.grid_n;

    CsvTable table;
    table.comments = artifact_comments(cfg);
    table.comments.push_back(
        "mass-frequency curve: omega ascending, |omega| log-spaced in "
        "[1e-6, 1e4]");
    table.columns = {"omega", "mu", "dmu_sign"};

    SvgSeries curve;
    for (int i = 0; i < n; ++i) {
        const double lw = 4.0 - 10.0 * i / (n - 1);  // log10|omega|
        const double omega = -std::pow(10.0, lw);
        const WaveSolution sol = solve_from_omega(omega, spec, cfg.root_tol);
        const int s = sign_of(mass_derivative_sign(sol.params, spec));
        table.rows.push_back(
            {fmt_g17(omega), fmt_g17(sol.mu), std::to_string(s)});
        curve.x.push_back(lw);
        curve.y.push_back(sol.mu);
    }

    ensure_output_dir(cfg);
    write_csv(path_join(cfg.output_dir, "mass_curve.csv"), table);

    SvgPlot plot;
    plot.title = "Mass vs frequency";
    plot.xlabel = "log10(-omega)";
    plot.ylabel = "mu";
    plot.series = {curve};
    plot.hlines = {0.25 * kPi, 0.5 * kPi};
    write_svg(path_join(cfg.output_dir, "mass_curve.svg"), plot);
    return 0;
}

// ------------------------------------------------------------- critical --

int cmd_critical(const RunConfig& cfg) {
    const QuadratureSpec spec = quadrature_spec(cfg);
    const CriticalFrequencies crit = find_critical(spec, cfg.root_tol);
    const double mu_at_omega0 =
        solve_from_U0(crit.U0_at_omega0, spec).mu;

    ordered_json j;
    j["U1"] = crit.U1;
    j["omega1"] = crit.omega1;
    j["mu_max"] = crit.mu_max;
    j["omega0"] = crit.omega0;
    j["U0_at_omega0"] = crit.U0_at_omega0;
    j["mu_at_omega0"] = mu_at_omega0;
    j["mu_at_omega0_defect"] = std::fabs(mu_at_omega0 - 0.5 * kPi);
    j["omega1_by_maximization"] = crit.omega1_by_maximization;
    j["dual_method_rel_gap"] = crit.dual_method_rel_gap;
    j["config_hash"] = config_hash(cfg);

    ensure_output_dir(cfg);
    const std::string path = path_join(cfg.output_dir, "critical.json");
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw numerical_error("cannot open " + path);
    std::fprintf(f, "%s\n", j.dump(2).c_str());
    std::fclose(f);

    std::printf("omega1 = %s  (mass maximum, mu_max = %s)\n",
                fmt_g17(crit.omega1).c_str(), fmt_g17(crit.mu_max).c_str());
    std::printf("omega0 = %s  (mu = pi/2 crossing)\n",
                fmt_g17(crit.omega0).c_str());
    std::printf("dual-method gap on omega1: %s (relative)\n",
                fmt_g17(crit.dual_method_rel_gap).c_str());
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

// -------------------------------------------------------------- profile --

int cmd_profile(const RunConfig& cfg, double omega, int n) {
    const QuadratureSpec spec = quadrature_spec(cfg);
    const WaveSolution sol = solve_from_omega(omega, spec, cfg.root_tol);
    const double L = cfg.L_trunc_factor / std::sqrt(-omega);
    const GraphFunction gf = sample_graph_profile(sol, n, L);
    const ResidualReport rep = verify_residuals(gf);

    CsvTable table;
    table.comments = artifact_comments(cfg);
    table.comments.push_back("omega=" + fmt_g17(omega) +
                             " U0=" + fmt_g17(sol.params.U0) +
                             " eps=" + fmt_g17(sol.eps));
    table.comments.push_back(
        "vertex_continuity_defect=" + fmt_g17(rep.vertex_continuity_defect) +
        " vertex_flux_defect=" + fmt_g17(rep.vertex_flux_defect));
    table.comments.push_back(
        "max_ring_residual=" + fmt_g17(rep.max_ring_residual) +
        " max_tail_residual=" + fmt_g17(rep.max_tail_residual));
    table.columns = {"edge", "x", "value", "derivative"};
    for (const GraphNode& nd : gf.ring_nodes)
        table.rows.push_back(
            {"ring", fmt_g17(nd.x), fmt_g17(nd.value), fmt_g17(nd.deriv)});
    for (const GraphNode& nd : gf.tail_nodes)
        table.rows.push_back(
            {"tail", fmt_g17(nd.x), fmt_g17(nd.value), fmt_g17(nd.deriv)});

    // Phase-plane data in the scaled variable: ring orbit (U, U') over one
    // half period, half-line orbit (phi, phi') from the matching point a.
    CsvTable phase;
    phase.comments = artifact_comments(cfg);
    phase.comments.push_back(
        "scaled phase plane; the ring slope halves across the vertex: "
        "2 U'(T) = phi'(a)");
    phase.columns = {"edge", "z", "U", "dU"};
    const double T = ring_half_period(sol);
    const int m = std::max(n, 64);
    for (int i = 0; i <= m; ++i) {
        const double z = T * i / m;
        const auto ud = profile_exact_d(sol, z);
        phase.rows.push_back(
            {"ring", fmt_g17(z), fmt_g17(ud[0]), fmt_g17(ud[1])});
    }
    const double z_max = sol.eps * sol.eps * L;
    for (int i = 0; i <= m; ++i) {
        const double z = sol.params.a + z_max * i / m;
        const auto sv = soliton_phi(z);
        phase.rows.push_back(
            {"tail", fmt_g17(z), fmt_g17(sv.phi), fmt_g17(sv.dphi)});
    }

    ensure_output_dir(cfg);
    write_csv(path_join(cfg.output_dir, "profile.csv"), table);
    write_csv(path_join(cfg.output_dir, "profile_phase.csv"), phase);

    SvgSeries ring, tail;
    for (const GraphNode& nd : gf.ring_nodes) {
        ring.x.push_back(nd.x);
        ring.y.push_back(nd.value);
    }
    tail.color = "#c2452d";
    for (const GraphNode& nd : gf.tail_nodes) {
        tail.x.push_back(kPi + nd.x);
        tail.y.push_back(nd.value);
    }
    SvgPlot plot;
    plot.title = "Standing wave profile (ring, then half-line)";
    plot.xlabel = "x (ring arc length; half-line offset by pi)";
    plot.ylabel = "Phi";
    plot.series = {ring, tail};
    write_svg(path_join(cfg.output_dir, "profile.svg"), plot);

    std::printf("vertex continuity defect %s, flux defect %s\n",
                fmt_g17(rep.vertex_continuity_defect).c_str(),
                fmt_g17(rep.vertex_flux_defect).c_str());
    return 0;
}

// ------------------------------------------------------------- spectrum --

int cmd_spectrum(const RunConfig& cfg) {
    const int n = cfg.grid_n;

    CsvTable table;
    table.comments = artifact_comments(cfg);
    {
        std::string line =
            "embedded eigenvalues lambda = n^2 (u = sin nx on the ring):";
        for (const auto& ev : embedded_eigenvalues(5))
            line += " " + std::to_string(static_cast<int>(ev.lambda));
        table.comments.push_back(line);
    }
    {
        std::vector<double> lam_grid;
        for (int i = 0; i < 200; ++i)
            lam_grid.push_back(-25.0 + 24.99 * i / 199.0);
        const NegativeSpectrumReport neg = no_negative_eigenvalues(lam_grid);
        table.comments.push_back(
            "negative-lambda eigenvalue condition 1 + 2 tanh(pi sqrt|lambda|)"
            ": min=" +
            fmt_g17(neg.min_value) +
            (neg.empty ? " (no negative eigenvalues)" : " (CHECK FAILED)"));
    }
    table.columns = {"k", "re_a", "im_a", "re_b", "im_b"};
    double worst_unitarity = 0.0, worst_jost = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = 5.0 * i / (n - 1);
        const ScatteringData sd = scattering(k);
        const JostResiduals jr = jost_vertex_residuals(sd);
        worst_unitarity =
            std::fmax(worst_unitarity, std::fabs(std::abs(sd.b_coeff) - 1.0));
        worst_jost = std::fmax(worst_jost, std::fmax(jr.continuity, jr.flux));
        table.rows.push_back({fmt_g17(k), fmt_g17(sd.a_coeff.real()),
                              fmt_g17(sd.a_coeff.imag()),
                              fmt_g17(sd.b_coeff.real()),
                              fmt_g17(sd.b_coeff.imag())});
    }
    table.comments.push_back("max | |b|-1 | on grid: " +
                             fmt_g17(worst_unitarity));
    table.comments.push_back("max Jost vertex residual on grid: " +
                             fmt_g17(worst_jost));

    ensure_output_dir(cfg);
    write_csv(path_join(cfg.output_dir, "spectrum.csv"), table);
    std::printf("wrote %s (max unitarity defect %s)\n",
                path_join(cfg.output_dir, "spectrum.csv").c_str(),
                fmt_g17(worst_unitarity).c_str());
    return 0;
}

// ---------------------------------------------------------- asymptotics --

int cmd_asymptotics(const RunConfig& cfg) {
    const QuadratureSpec spec = quadrature_spec(cfg);

    CsvTable table;
    table.comments = artifact_comments(cfg);
    {
        const AsymptoticRegime small = small_omega_regime(spec);
        table.comments.push_back(
            "small-omega law within 1% for |omega| <= " +
            fmt_g17(small.validity_hint));
        const AsymptoticRegime large = large_omega_regime(spec);
        std::string line = "large-omega law within 1% for |omega| >= " +
                           fmt_g17(large.validity_hint);
        if (large.extrapolated)
            line +=
                " (extrapolated from the fitted decay of the measured "
                "defect)";
        table.comments.push_back(line);
    }
    table.columns = {"omega",        "mu",          "mu_small",
                     "mu_large",     "small_defect", "large_defect"};

    std::vector<double> omegas;
    for (int i = 0; i <= 6; ++i)  // |omega| = 1e-5 ... 1e-3
        omegas.push_back(-std::pow(10.0, -5.0 + 2.0 * i / 6.0));
    for (double eps2 = 2.0; eps2 <= 3.5 + 1e-12; eps2 += 0.25)
        omegas.push_back(-eps2 * eps2);

    for (double omega : omegas) {
        const WaveSolution sol = solve_from_omega(omega, spec, cfg.root_tol);
        const double ms = mu_small(omega);
        const double ml = mu_large(omega);
        table.rows.push_back({fmt_g17(omega), fmt_g17(sol.mu), fmt_g17(ms),
                              fmt_g17(ml), fmt_g17(sol.mu - ms),
                              fmt_g17(sol.mu - ml)});
    }

    ensure_output_dir(cfg);
    write_csv(path_join(cfg.output_dir, "asymptotics.csv"), table);
    std::printf("wrote %s\n",
                path_join(cfg.output_dir, "asymptotics.csv").c_str());
    return 0;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const RunConfig& cfg) {
    const std::vector<CheckResult> checks = run_verify(cfg);

    ordered_json j;
    j["config_hash"] = config_hash(cfg);
    j["checks"] = ordered_json::array();
    for (const CheckResult& c : checks) {
        std::printf("[%s] %-28s value=%-13.6g threshold=%-13.6g %s\n",
                    c.pass ? "PASS" : "FAIL", c.id.c_str(), c.value,
                    c.threshold, c.detail.c_str());
        j["checks"].push_back({{"id", c.id},
                               {"pass", c.pass},
                               {"value", c.value},
                               {"threshold", c.threshold},
                               {"detail", c.detail}});
    }
    const bool ok = all_passed(checks);
    j["all_passed"] = ok;

    ensure_output_dir(cfg);
    const std::string path = path_join(cfg.output_dir, "verify.json");
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw numerical_error("cannot open " + path);
    std::fprintf(f, "%s\n", j.dump(2).c_str());
    std::fclose(f);

    std::printf("%zu/%zu checks passed\n",
                checks.size() - static_cast<std::size_t>(std::count_if(
                                    checks.begin(), checks.end(),
                                    [](const CheckResult& c) {
                                        return !c.pass;
                                    })),
                checks.size());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Standing waves of the quintic focusing NLS on the tadpole graph"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_file, output_dir, format_str;
    double quad_tol = 0, root_tol = 0, L_factor = 0;
    int grid_n = 0;
    app.add_option("--config", config_file,
                   "flat key=value config file (# comments allowed)");
    auto* o_quad = app.add_option("--quad-tol", quad_tol,
                                  "adaptive quadrature tolerance");
    auto* o_root =
        app.add_option("--root-tol", root_tol, "root-finding tolerance");
    auto* o_grid = app.add_option("--grid-n", grid_n, "grid/sweep size");
    auto* o_trunc = app.add_option("--l-trunc-factor", L_factor,
                                   "half-line truncation: L = factor/sqrt|w|");
    auto* o_out = app.add_option("--output-dir", output_dir,
                                 "artifact directory (default: "
                                 "$TADPOLE_OUTPUT_DIR or '.')");
    auto* o_fmt = app.add_option("--format", format_str, "csv or json")
                      ->check(CLI::IsMember({"csv", "json"}));

    auto* sc_solve = app.add_subcommand(
        "solve", "construct one standing wave and report its parameters");
    double omega = 0.0, u0 = 0.0;
    auto* o_omega =
        sc_solve->add_option("--omega", omega, "frequency (must be < 0)");
    auto* o_u0 =
        sc_solve->add_option("--u0", u0, "vertex amplitude U0 in (0, 1)");

    auto* sc_mass = app.add_subcommand(
        "mass-curve", "sweep mu(omega) over |omega| in [1e-6, 1e4]");

    auto* sc_crit = app.add_subcommand(
        "critical", "locate omega_1 (mass maximum) and omega_0 (mu = pi/2)");

    auto* sc_prof = app.add_subcommand(
        "profile", "sample the graph profile and check residuals");
    double prof_omega = 0.0;
    int prof_n = -1;
    sc_prof->add_option("--omega", prof_omega, "frequency (must be < 0)")
        ->required();
    sc_prof->add_option("--n", prof_n, "ring sample count (default grid_n)");

    auto* sc_spec = app.add_subcommand(
        "spectrum", "tabulate vertex scattering coefficients a(k), b(k)");

    auto* sc_asym = app.add_subcommand(
        "asymptotics", "compare mu(omega) against its asymptotic laws");

    auto* sc_verify =
        app.add_subcommand("verify", "run the self-check invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    bool file_sets_output_dir = false;
    try {
        if (!config_file.empty()) {
            const auto kv = read_key_value_file(config_file);
            apply_key_value(cfg, kv);
            file_sets_output_dir = kv.count("output_dir") > 0;
        }
        if (o_out->count() == 0 && !file_sets_output_dir) {
            if (const char* env = std::getenv("TADPOLE_OUTPUT_DIR"))
                if (*env) cfg.output_dir = env;
        }
        if (o_quad->count()) cfg.quad_tol = quad_tol;
        if (o_root->count()) cfg.root_tol = root_tol;
        if (o_grid->count()) cfg.grid_n = grid_n;
        if (o_trunc->count()) cfg.L_trunc_factor = L_factor;
        if (o_out->count()) cfg.output_dir = output_dir;
        if (o_fmt->count())
            cfg.format = (format_str == "json") ? OutputFormat::json
                                                : OutputFormat::csv;
        validate(cfg);
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        if (sc_solve->parsed()) {
            if (o_omega->count() + o_u0->count() != 1) {
                std::fprintf(stderr,
                             "error: solve requires exactly one of --omega "
                             "or --u0\n");
                return 2;
            }
            return cmd_solve(cfg, o_omega->count() > 0, omega,
                             o_u0->count() > 0, u0);
        }
        if (sc_mass->parsed()) return cmd_mass_curve(cfg);
        if (sc_crit->parsed()) return cmd_critical(cfg);
        if (sc_prof->parsed())
            return cmd_profile(cfg, prof_omega,
                               prof_n > 0 ? prof_n : cfg.grid_n);
        if (sc_spec->parsed()) return cmd_spectrum(cfg);
        if (sc_asym->parsed()) return cmd_asymptotics(cfg);
        if (sc_verify->parsed()) return cmd_verify(cfg);
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const exceptional_point& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return 3;
    }
    return 2;
}
