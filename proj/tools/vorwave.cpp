// Command-line driver: every experiment (full solver, Dysthe solver, the
// side-by-side comparison, the stability map and the consistency checks) is
// reachable from here, configured by flags or a flat key=value file.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vorwave/harness.hpp"

namespace {

using namespace vw;

struct CommonFlags {
    std::string config;
    std::string out;
    double gamma = 0.0, g = 1.0, k0 = 10.0, b0 = 0.002, a0 = 0.0, lambda = 1.0;
    double dt = 0.005, t_end = 1000.0, t_sample = 5.0;
    int n_nodes = 512, dno_order = 6;
    std::string variant = "narrowband";
    std::vector<double> snapshots;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config, "flat key=value config file");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_option("--gamma", f.gamma, "constant vorticity");
    cmd->add_option("--g", f.g, "gravitational acceleration");
    cmd->add_option("--k0", f.k0, "carrier wavenumber");
    cmd->add_option("--B0", f.b0, "envelope amplitude");
    cmd->add_option("--A0", f.a0, "surface amplitude (alternative to --B0)");
    cmd->add_option("--lambda-pert", f.lambda, "perturbation wavenumber");
    cmd->add_option("--n-nodes", f.n_nodes, "collocation points");
    cmd->add_option("--dt", f.dt, "time step");
    cmd->add_option("--t-end", f.t_end, "final time");
    cmd->add_option("--t-sample", f.t_sample, "diagnostic sampling interval");
    cmd->add_option("--dno-order", f.dno_order, "DNO truncation order");
    cmd->add_option("--variant", f.variant,
                    "dysthe variant: narrowband | full_dispersion | moving_frame");
    cmd->add_option("--snapshot-times", f.snapshots, "times at which to dump fields");
}

DystheVariant parse_variant(const std::string& s) {
    if (s == "narrowband") return DystheVariant::Narrowband;
    if (s == "full_dispersion") return DystheVariant::FullDispersion;
    if (s == "moving_frame") return DystheVariant::MovingFrame;
    throw CLI::ValidationError("--variant", "unknown variant: " + s);
}

ScenarioConfig build_config(const CLI::App* cmd, const CommonFlags& f) {
    ScenarioConfig cfg;
    if (!f.config.empty()) cfg = load_config(f.config);
    auto seen = [cmd](const std::string& name) { return cmd->count(name) > 0; };
    if (seen("--gamma")) cfg.gamma = f.gamma;
    if (seen("--g")) cfg.g = f.g;
    if (seen("--k0")) cfg.k0 = f.k0;
    if (seen("--B0")) {
        cfg.b0 = f.b0;
        cfg.amplitude_is_b0 = true;
    }
    if (seen("--A0")) {
        if (seen("--B0")) throw CLI::ValidationError("--A0", "give either --A0 or --B0");
        cfg.b0 = f.a0;
        cfg.amplitude_is_b0 = false;
    }
    if (seen("--lambda-pert")) cfg.lambda_pert = f.lambda;
    if (seen("--n-nodes")) cfg.n_nodes = f.n_nodes;
    if (seen("--dt")) cfg.dt = f.dt;
    if (seen("--t-end")) cfg.t_end = f.t_end;
    if (seen("--t-sample")) cfg.t_sample = f.t_sample;
    if (seen("--dno-order")) cfg.dno_order = f.dno_order;
    if (seen("--variant")) cfg.variant = parse_variant(f.variant);
    if (seen("--snapshot-times")) cfg.snapshot_times = f.snapshots;
    if (!f.out.empty()) cfg.output_dir = f.out;
    if (cfg.dt <= 0.0) throw CLI::ValidationError("--dt", "dt must be positive");
    if (cfg.t_end < 0.0) throw CLI::ValidationError("--t-end", "t_end must be nonnegative");
    return cfg;
}

void print_progress(const DiagnosticsRecord& r) {
    std::printf("t=%9.2f  l2=%.6e  max_eta=%.6e\n", r.time, r.l2_rel_err, r.max_eta);
    std::fflush(stdout);
}

int cmd_compare(const ScenarioConfig& cfg) {
    const auto rows = run_compare(cfg, print_progress);
    write_series_csv(cfg.output_dir + "/series.csv", rows);
    std::printf("max growth at t=%g, error plateau (t<200) %.3e\n", time_of_max_growth(rows),
                error_plateau(rows, 200.0));
    return 0;
}

int cmd_simulate_full(const ScenarioConfig& cfg) {
    SpectralGrid grid(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    const ComplexField u0 = initial_envelope(grid, p.B0, cfg.lambda_pert);
    const CanonicalState s0 = envelope_to_surface(grid, cfg.g, cfg.gamma, cfg.k0, u0, cfg.dt);
    SurfaceState s{s0.eta, zeta_to_xi(grid, cfg.gamma, s0.eta, s0.zeta)};
    EulerStepper euler(grid, cfg.g, cfg.gamma, cfg.dno_order, cfg.dt);
    auto sp = euler.lift(s);
    const int per = std::max(1, static_cast<int>(std::llround(cfg.t_sample / cfg.dt)));
    const int samples = static_cast<int>(std::llround(cfg.t_end / cfg.t_sample));
    auto emit = [&](double t, const SurfaceState& st) {
        for (double ts : cfg.snapshot_times)
            if (std::fabs(ts - t) < 0.5 * cfg.t_sample) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "/full_t%g_surface.csv", t);
                write_surface_csv(cfg.output_dir + buf, grid, st.eta, st.xi);
            }
    };
    emit(0.0, s);
    for (int i = 1; i <= samples; ++i) {
        for (int j = 0; j < per; ++j) euler.step(sp);
        s = euler.lower(sp);
        const double h = energy_full(grid, cfg.g, cfg.gamma, cfg.dno_order, s.eta, s.xi);
        std::printf("t=%9.2f  H=%.12e  I=%.12e  V=%.3e\n", i * cfg.t_sample, h,
                    momentum(grid, cfg.gamma, s.eta, s.xi), volume(grid, s.eta));
        std::fflush(stdout);
        emit(i * cfg.t_sample, s);
    }
    write_surface_csv(cfg.output_dir + "/full_final_surface.csv", grid, s.eta, s.xi);
    return 0;
}

int cmd_simulate_dysthe(const ScenarioConfig& cfg) {
    SpectralGrid grid(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    EnvelopeStepper env(grid, cfg.variant, p, cfg.dt);
    ComplexField u = initial_envelope(grid, p.B0, cfg.lambda_pert);
    auto cu = env.lift(u);
    const int per = std::max(1, static_cast<int>(std::llround(cfg.t_sample / cfg.dt)));
    const int samples = static_cast<int>(std::llround(cfg.t_end / cfg.t_sample));
    for (int i = 1; i <= samples; ++i) {
        for (int j = 0; j < per; ++j) env.step(cu);
        u = env.lower(cu);
        std::printf("t=%9.2f  M=%.12e  H_red=%.12e\n", i * cfg.t_sample, action(grid, u),
                    reduced_hamiltonian(grid, cfg.variant, env.coefficients(), cfg.g,
                                        cfg.gamma, u));
        std::fflush(stdout);
        for (double ts : cfg.snapshot_times)
            if (std::fabs(ts - i * cfg.t_sample) < 0.5 * cfg.t_sample) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "/dysthe_t%g_envelope.csv", i * cfg.t_sample);
                write_envelope_csv(cfg.output_dir + buf, grid, u);
            }
    }
    write_envelope_csv(cfg.output_dir + "/dysthe_final_envelope.csv", grid, u);
    return 0;
}

int cmd_stability_map(const ScenarioConfig& cfg, double lambda_max, double dlambda) {
    const auto pts = run_stability_map(cfg.physical(), lambda_max, dlambda);
    char buf[64];
    std::snprintf(buf, sizeof buf, "/stability_gamma%g.csv", cfg.gamma);
    write_stability_csv(cfg.output_dir + buf, pts);
    double lam_lo = 0.0, lam_hi = 0.0, sig_max = 0.0;
    for (const auto& q : pts) {
        if (q.sigma > 0.0) {
            if (lam_lo == 0.0) lam_lo = q.lambda;
            lam_hi = q.lambda;
        }
        sig_max = std::max(sig_max, q.sigma);
    }
    if (sig_max > 0.0)
        std::printf("gamma=%g: unstable band [%g, %g], max sigma %.6e\n", cfg.gamma, lam_lo,
                    lam_hi, sig_max);
    else
        std::printf("gamma=%g: stable at all scanned wavenumbers\n", cfg.gamma);
    return 0;
}

int cmd_reconstruct_check(const ScenarioConfig& cfg) {
    SpectralGrid grid(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    const ComplexField u0 = initial_envelope(grid, p.B0, cfg.lambda_pert);
    const CanonicalState s = envelope_to_surface(grid, cfg.g, cfg.gamma, cfg.k0, u0, cfg.dt);
    const ComplexField u1 = surface_to_envelope(grid, cfg.g, cfg.gamma, cfg.k0, s, cfg.dt);
    double err = 0.0, scale = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        err = std::max(err, std::abs(u1[j] - u0[j]));
        scale = std::max(scale, std::abs(u0[j]));
    }
    std::printf("round-trip envelope error: %.3e (relative %.3e)\n", err, err / scale);
    return err / scale < 1e-10 ? 0 : 1;
}

int cmd_energy_check(const ScenarioConfig& cfg) {
    SpectralGrid grid(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    const ComplexField u0 = initial_envelope(grid, p.B0, cfg.lambda_pert);
    const CanonicalState s0 = envelope_to_surface(grid, cfg.g, cfg.gamma, cfg.k0, u0, cfg.dt);
    SurfaceState s{s0.eta, zeta_to_xi(grid, cfg.gamma, s0.eta, s0.zeta)};
    EulerStepper euler(grid, cfg.g, cfg.gamma, cfg.dno_order, cfg.dt);
    auto sp = euler.lift(s);
    s = euler.lower(sp);
    const double h0 = energy_full(grid, cfg.g, cfg.gamma, cfg.dno_order, s.eta, s.xi);
    const double i0 = momentum(grid, cfg.gamma, s.eta, s.xi);
    const int steps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
    for (int j = 0; j < steps; ++j) euler.step(sp);
    s = euler.lower(sp);
    const double h1 = energy_full(grid, cfg.g, cfg.gamma, cfg.dno_order, s.eta, s.xi);
    const double i1 = momentum(grid, cfg.gamma, s.eta, s.xi);
    std::printf("t=%g: dH/H = %.3e, dI/I = %.3e, V = %.3e\n", cfg.t_end, (h1 - h0) / h0,
                (i1 - i0) / i0, volume(grid, s.eta));
    return 0;
}

int cmd_coeffs(const ScenarioConfig& cfg) {
    const ModelCoefficients c = compute_coefficients(cfg.physical());
    std::printf("k0      = %.17g\n", c.k0);
    std::printf("omega0  = %.17g\n", c.omega0);
    std::printf("Omega0  = %.17g\n", c.Omega0);
    std::printf("cg      = %.17g\n", c.cg);
    std::printf("A0      = %.17g\n", c.A0);
    std::printf("eps     = %.17g\n", c.eps);
    std::printf("beta0   = %.17g\n", c.beta0);
    std::printf("beta    = %.17g\n", c.beta);
    std::printf("beta3   = %.17g\n", c.beta3);
    std::printf("c0l,c0r = %.17g, %.17g\n", c.c0l, c.c0r);
    std::printf("c1l,c1r = %.17g, %.17g\n", c.c1l, c.c1r);
    std::printf("c2l,c2r = %.17g, %.17g\n", c.c2l, c.c2r);
    std::printf("c3l     = %.17g\n", c.c3l);
    std::printf("c3r1,2  = %.17g, %.17g\n", c.c3r1, c.c3r2);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deep-water wave packets over constant vorticity: full solver, "
                 "Dysthe model, and their comparison"};
    app.require_subcommand(1);

    CommonFlags f;
    double lambda_max = 20.0, dlambda = 0.01;

    auto* c_full = app.add_subcommand("simulate-full", "run the fully nonlinear solver");
    auto* c_dysthe = app.add_subcommand("simulate-dysthe", "run the envelope model");
    auto* c_cmp = app.add_subcommand("compare", "run both and track the L2 error");
    auto* c_map = app.add_subcommand("stability-map", "scan the BF instability condition");
    auto* c_rec = app.add_subcommand("reconstruct-check", "round-trip the reconstruction");
    auto* c_en = app.add_subcommand("energy-check", "measure conservation drift");
    auto* c_co = app.add_subcommand("coeffs", "print the model coefficient table");
    for (auto* cmd : {c_full, c_dysthe, c_cmp, c_map, c_rec, c_en, c_co}) add_common(cmd, f);
    c_map->add_option("--lambda-max", lambda_max, "scan upper bound");
    c_map->add_option("--dlambda", dlambda, "scan step");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_full->parsed()) return cmd_simulate_full(build_config(c_full, f));
        if (c_dysthe->parsed()) return cmd_simulate_dysthe(build_config(c_dysthe, f));
        if (c_cmp->parsed()) return cmd_compare(build_config(c_cmp, f));
        if (c_map->parsed()) return cmd_stability_map(build_config(c_map, f), lambda_max, dlambda);
        if (c_rec->parsed()) return cmd_reconstruct_check(build_config(c_rec, f));
        if (c_en->parsed()) return cmd_energy_check(build_config(c_en, f));
        if (c_co->parsed()) return cmd_coeffs(build_config(c_co, f));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
