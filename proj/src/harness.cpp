#include "vorwave/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vw {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string variant_name(DystheVariant v) {
    switch (v) {
        case DystheVariant::Narrowband: return "narrowband";
        case DystheVariant::FullDispersion: return "full_dispersion";
        case DystheVariant::MovingFrame: return "moving_frame";
    }
    return "narrowband";
}

DystheVariant variant_from(const std::string& s) {
    if (s == "narrowband") return DystheVariant::Narrowband;
    if (s == "full_dispersion") return DystheVariant::FullDispersion;
    if (s == "moving_frame") return DystheVariant::MovingFrame;
    throw std::runtime_error("unknown variant: " + s);
}

std::string run_name(RunKind r) {
    switch (r) {
        case RunKind::Full: return "full";
        case RunKind::Dysthe: return "dysthe";
        case RunKind::Compare: return "compare";
        case RunKind::StabilityMap: return "stability-map";
        case RunKind::ReconstructCheck: return "reconstruct-check";
        case RunKind::EnergyCheck: return "energy-check";
    }
    return "compare";
}

RunKind run_from(const std::string& s) {
    if (s == "full") return RunKind::Full;
    if (s == "dysthe") return RunKind::Dysthe;
    if (s == "compare") return RunKind::Compare;
    if (s == "stability-map") return RunKind::StabilityMap;
    if (s == "reconstruct-check") return RunKind::ReconstructCheck;
    if (s == "energy-check") return RunKind::EnergyCheck;
    throw std::runtime_error("unknown run kind: " + s);
}

}  // namespace

PhysicalParams ScenarioConfig::physical() const {
    PhysicalParams p;
    p.g = g;
    p.gamma = gamma;
    p.k0 = k0;
    p.B0 = amplitude_is_b0 ? b0 : surface_to_envelope_amp(b0, k0, g, gamma);
    return p;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    ScenarioConfig cfg;
    bool saw_k0 = false, saw_gamma = false, saw_b0 = false, saw_a0 = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "g") cfg.g = std::stod(val);
        else if (key == "gamma") { cfg.gamma = std::stod(val); saw_gamma = true; }
        else if (key == "k0") { cfg.k0 = std::stod(val); saw_k0 = true; }
        else if (key == "B0") { cfg.b0 = std::stod(val); cfg.amplitude_is_b0 = true; saw_b0 = true; }
        else if (key == "A0") { cfg.b0 = std::stod(val); cfg.amplitude_is_b0 = false; saw_a0 = true; }
        else if (key == "lambda_pert") cfg.lambda_pert = std::stod(val);
        else if (key == "n_nodes") cfg.n_nodes = std::stoi(val);
        else if (key == "dt") cfg.dt = std::stod(val);
        else if (key == "t_end") cfg.t_end = std::stod(val);
        else if (key == "dno_order") cfg.dno_order = std::stoi(val);
        else if (key == "t_sample") cfg.t_sample = std::stod(val);
        else if (key == "snapshot_times") {
            cfg.snapshot_times.clear();
            std::istringstream ts(val);
            std::string tok;
            while (std::getline(ts, tok, ',')) {
                tok = trim(tok);
                if (!tok.empty()) cfg.snapshot_times.push_back(std::stod(tok));
            }
        }
        else if (key == "variant") cfg.variant = variant_from(val);
        else if (key == "run") cfg.run = run_from(val);
        else if (key == "output_dir") cfg.output_dir = val;
        else throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
    if (!saw_k0) throw std::runtime_error(path + ": missing required key k0");
    if (!saw_gamma) throw std::runtime_error(path + ": missing required key gamma");
    if (saw_b0 && saw_a0)
        throw std::runtime_error(path + ": keys B0 and A0 are mutually exclusive");
    if (!saw_b0 && !saw_a0)
        throw std::runtime_error(path + ": missing required key B0 (or A0)");
    return cfg;
}

void save_config(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config: " + path);
    out.precision(17);
    out << "g = " << cfg.g << "\n"
        << "gamma = " << cfg.gamma << "\n"
        << "k0 = " << cfg.k0 << "\n"
        << (cfg.amplitude_is_b0 ? "B0 = " : "A0 = ") << cfg.b0 << "\n"
        << "lambda_pert = " << cfg.lambda_pert << "\n"
        << "n_nodes = " << cfg.n_nodes << "\n"
        << "dt = " << cfg.dt << "\n"
        << "t_end = " << cfg.t_end << "\n"
        << "dno_order = " << cfg.dno_order << "\n"
        << "t_sample = " << cfg.t_sample << "\n";
    if (!cfg.snapshot_times.empty()) {
        out << "snapshot_times = ";
        for (size_t i = 0; i < cfg.snapshot_times.size(); ++i)
            out << (i ? "," : "") << cfg.snapshot_times[i];
        out << "\n";
    }
    out << "variant = " << variant_name(cfg.variant) << "\n"
        << "run = " << run_name(cfg.run) << "\n"
        << "output_dir = " << cfg.output_dir << "\n";
}

namespace {

DiagnosticsRecord make_row(const ScenarioConfig& cfg, const SpectralGrid& g, double t,
                           const SurfaceState& full, const ComplexField& u,
                           const ModelCoefficients& mc) {
    DiagnosticsRecord row;
    row.time = t;
    const CanonicalState rec = envelope_to_surface(g, cfg.g, cfg.gamma, cfg.k0, u, cfg.dt);
    double num = 0.0, den = 0.0;
    for (int j = 0; j < g.n; ++j) {
        const double d = full.eta[j] - rec.eta[j];
        num += d * d;
        den += full.eta[j] * full.eta[j];
        row.max_eta = std::max(row.max_eta, std::fabs(full.eta[j]));
        row.max_eta_env = std::max(row.max_eta_env, std::fabs(rec.eta[j]));
    }
    row.l2_rel_err = std::sqrt(num / den);
    row.h_full = energy_full(g, cfg.g, cfg.gamma, cfg.dno_order, full.eta, full.xi);
    row.i_momentum = momentum(g, cfg.gamma, full.eta, full.xi);
    row.v_full = volume(g, full.eta);
    row.m_action = action(g, u);
    row.h_reduced = reduced_hamiltonian(g, cfg.variant, mc, cfg.g, cfg.gamma, u);
    const int mode = static_cast<int>(std::llround(cfg.lambda_pert));
    const ComplexField cu = to_spectrum(g, u);
    row.sideband_amp = std::abs(cu[(mode % g.n + g.n) % g.n]);
    return row;
}

std::string snap_tag(double t) {
    std::ostringstream os;
    os << "t" << t;
    std::string s = os.str();
    for (auto& c : s)
        if (c == '.') c = 'p';
    return s;
}

}  // namespace

std::vector<DiagnosticsRecord> run_compare(const ScenarioConfig& cfg,
                                           void (*progress)(const DiagnosticsRecord&)) {
    SpectralGrid g(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    const ComplexField u0 = initial_envelope(g, p.B0, cfg.lambda_pert);
    const CanonicalState s0 = envelope_to_surface(g, cfg.g, cfg.gamma, cfg.k0, u0, cfg.dt);
    SurfaceState full{s0.eta, zeta_to_xi(g, cfg.gamma, s0.eta, s0.zeta)};

    EulerStepper euler(g, cfg.g, cfg.gamma, cfg.dno_order, cfg.dt);
    EnvelopeStepper env(g, cfg.variant, p, cfg.dt);

    const int per_sample = std::max(1, static_cast<int>(std::llround(cfg.t_sample / cfg.dt)));
    const int samples = static_cast<int>(std::llround(cfg.t_end / cfg.t_sample));

    // snapshot times rounded onto the sampling lattice
    auto want_snapshot = [&cfg](double t) {
        for (double ts : cfg.snapshot_times)
            if (std::fabs(ts - t) < 0.5 * cfg.t_sample) return true;
        return false;
    };
    auto emit_snapshot = [&](double t, const SurfaceState& s, const ComplexField& u) {
        const std::string base = cfg.output_dir + "/snapshot_" + snap_tag(t);
        write_surface_csv(base + "_surface.csv", g, s.eta, s.xi);
        write_envelope_csv(base + "_envelope.csv", g, u);
    };

    std::vector<DiagnosticsRecord> rows;
    rows.reserve(samples + 1);
    auto sp = euler.lift(full);
    auto cu = env.lift(u0);
    rows.push_back(make_row(cfg, g, 0.0, full, u0, env.coefficients()));
    if (progress) progress(rows.back());
    if (want_snapshot(0.0)) emit_snapshot(0.0, full, u0);
    for (int i = 1; i <= samples; ++i) {
        for (int j = 0; j < per_sample; ++j) {
            euler.step(sp);
            env.step(cu);
        }
        full = euler.lower(sp);
        const ComplexField u = env.lower(cu);
        const double t = i * cfg.t_sample;
        rows.push_back(make_row(cfg, g, t, full, u, env.coefficients()));
        if (progress) progress(rows.back());
        if (want_snapshot(t)) emit_snapshot(t, full, u);
    }
    return rows;
}

double time_of_max_growth(const std::vector<DiagnosticsRecord>& rows) {
    double best = -1.0, t = 0.0;
    for (const auto& r : rows)
        if (r.max_eta > best) {
            best = r.max_eta;
            t = r.time;
        }
    return t;
}

double error_plateau(const std::vector<DiagnosticsRecord>& rows, double t_before) {
    double level = 0.0;
    for (const auto& r : rows)
        if (r.time > 0.0 && r.time < t_before) level = std::max(level, r.l2_rel_err);
    return level;
}

std::vector<StabilityPoint> run_stability_map(const PhysicalParams& p, double lambda_max,
                                              double dlambda) {
    const ModelCoefficients c = compute_coefficients(p);
    std::vector<StabilityPoint> out;
    const int m = static_cast<int>(std::llround(lambda_max / dlambda));
    out.reserve(m);
    for (int i = 1; i <= m; ++i) {
        const double lam = i * dlambda;
        const GrowthRate gr = bf_growth_rate(c, p.g, p.B0, lam);
        out.push_back({lam, gr.Gamma, gr.sigma});
    }
    return out;
}

GrowthFit fit_growth_rate(const std::vector<double>& t, const std::vector<double>& amp,
                          double carrier_amp) {
    if (t.size() != amp.size() || t.size() < 3)
        throw std::runtime_error("fit_growth_rate: need matching series with >= 3 samples");
    const int n = static_cast<int>(t.size());
    std::vector<double> la(n);
    for (int i = 0; i < n; ++i) la[i] = std::log(amp[i]);

    // linear-growth window: from 3x over the initial level up to a third of
    // the carrier (pump depletion distorts the slope beyond that)
    GrowthFit out;
    int lo = -1;
    for (int i = 0; i < n; ++i)
        if (amp[i] >= 3.0 * amp[0]) {
            lo = i;
            break;
        }
    if (lo < 0) return out;  // never grew: stable run
    int hi = n - 1;
    if (carrier_amp > 0.0)
        for (int i = lo; i < n; ++i)
            if (amp[i] >= carrier_amp / 3.0) {
                hi = i;
                break;
            }
    if (hi - lo < 2) return out;
    double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    const int m = hi - lo + 1;
    for (int i = lo; i <= hi; ++i) {
        st += t[i];
        sl += la[i];
        stt += t[i] * t[i];
        stl += t[i] * la[i];
    }
    out.window_found = true;
    out.sigma_fit = (m * stl - st * sl) / (m * stt - st * st);
    out.t_center = 0.5 * (t[lo] + t[hi]);
    return out;
}

GrowthFit measure_growth(const ScenarioConfig& cfg) {
    SpectralGrid g(cfg.n_nodes);
    const PhysicalParams p = cfg.physical();
    EnvelopeStepper env(g, cfg.variant, p, cfg.dt);
    auto cu = env.lift(initial_envelope(g, p.B0, cfg.lambda_pert));
    const int mode = static_cast<int>(std::llround(cfg.lambda_pert));

    const double dt_s = 1.0;  // sampling interval for the log amplitude
    const int per_sample = static_cast<int>(std::llround(dt_s / cfg.dt));
    const int samples = static_cast<int>(std::llround(cfg.t_end / dt_s));
    std::vector<double> ts(samples + 1), amp(samples + 1);
    ts[0] = 0.0;
    amp[0] = std::abs(cu[(mode % g.n + g.n) % g.n]);
    for (int i = 1; i <= samples; ++i) {
        for (int j = 0; j < per_sample; ++j) env.step(cu);
        ts[i] = i * dt_s;
        amp[i] = std::abs(cu[(mode % g.n + g.n) % g.n]);
    }

    GrowthFit out = fit_growth_rate(ts, amp, p.B0);
    out.sigma_pred = bf_growth_rate(env.coefficients(), cfg.g, p.B0, cfg.lambda_pert).sigma;
    return out;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out.precision(17);
    return out;
}

}  // namespace

void write_series_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows) {
    auto out = open_out(path);
    out << "t,l2_rel_err,H_full,H_reduced,I,M,max_eta\n";
    for (const auto& r : rows)
        out << r.time << ',' << r.l2_rel_err << ',' << r.h_full << ',' << r.h_reduced << ','
            << r.i_momentum << ',' << r.m_action << ',' << r.max_eta << '\n';
}

void write_stability_csv(const std::string& path, const std::vector<StabilityPoint>& pts) {
    auto out = open_out(path);
    out << "lambda,Gamma,sigma\n";
    for (const auto& p : pts) out << p.lambda << ',' << p.Gamma << ',' << p.sigma << '\n';
}

void write_surface_csv(const std::string& path, const SpectralGrid& g, const RealField& eta,
                       const RealField& xi) {
    auto out = open_out(path);
    out << "x,eta,xi\n";
    for (int j = 0; j < g.n; ++j) out << g.x[j] << ',' << eta[j] << ',' << xi[j] << '\n';
}

void write_envelope_csv(const std::string& path, const SpectralGrid& g, const ComplexField& u) {
    auto out = open_out(path);
    out << "x,re_u,im_u,abs_u\n";
    for (int j = 0; j < g.n; ++j)
        out << g.x[j] << ',' << u[j].real() << ',' << u[j].imag() << ',' << std::abs(u[j])
            << '\n';
}

}  // namespace vw
