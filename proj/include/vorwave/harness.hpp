#pragma once
// Scenario driver: shared configuration, the full-vs-envelope comparison run,
// the Benjamin-Feir stability scan, sideband growth measurement, and CSV
// output helpers for the command-line tool and acceptance checks.

#include <string>
#include <vector>

#include "vorwave/envelope.hpp"
#include "vorwave/euler.hpp"
#include "vorwave/normalform.hpp"

namespace vw {

enum class RunKind { Full, Dysthe, Compare, StabilityMap, ReconstructCheck, EnergyCheck };

struct ScenarioConfig {
    // physical parameters
    double g = 1.0;
    double gamma = 0.0;         // constant vorticity
    double k0 = 10.0;           // carrier wavenumber
    double b0 = 0.002;          // envelope amplitude (surface A0 derived, or vice versa)
    bool amplitude_is_b0 = true;
    double lambda_pert = 1.0;   // sideband wavenumber of the perturbation

    // numerics
    int n_nodes = 512;
    double dt = 0.005;          // time step (also the s-flow step)
    double t_end = 1000.0;
    int dno_order = 6;
    double t_sample = 5.0;      // diagnostic sampling interval
    std::vector<double> snapshot_times;
    DystheVariant variant = DystheVariant::Narrowband;

    RunKind run = RunKind::Compare;
    std::string output_dir = ".";

    PhysicalParams physical() const;  // resolves B0 from A0 if needed
};

// Flat key=value config files. Field names follow the struct (B0 or A0 for
// the amplitude — exactly one); k0, gamma and the amplitude are required,
// everything else is defaulted. Unknown keys are rejected by name.
ScenarioConfig load_config(const std::string& path);
void save_config(const ScenarioConfig& cfg, const std::string& path);

// One sampled diagnostic row of a comparison run (the CSV keeps the first
// seven fields; the rest are extra probes for tests and tools).
struct DiagnosticsRecord {
    double time = 0.0;
    double l2_rel_err = 0.0;    // ||eta_full - eta_env|| / ||eta_full||, trapezoid rule
    double h_full = 0.0;        // full-solver energy
    double h_reduced = 0.0;     // envelope reduced Hamiltonian
    double i_momentum = 0.0;    // full-solver momentum
    double m_action = 0.0;      // envelope action
    double max_eta = 0.0;       // max over x of the full surface elevation
    double max_eta_env = 0.0;   // same for the reconstructed surface
    double v_full = 0.0;        // full-solver volume
    double sideband_amp = 0.0;  // |u_hat(lambda_pert)|
};

// Integrate the full solver and the envelope model side by side from the
// common reconstructed initial condition, reconstructing the envelope surface
// at every sample time. Snapshots are written to output_dir when
// snapshot_times is non-empty. progress (optional) receives each row.
std::vector<DiagnosticsRecord> run_compare(const ScenarioConfig& cfg,
                                           void (*progress)(const DiagnosticsRecord&) = nullptr);

// t at which max_eta peaks over the sampled rows.
double time_of_max_growth(const std::vector<DiagnosticsRecord>& rows);

// Largest l2_rel_err over 0 < t < t_before (pre-instability plateau level).
double error_plateau(const std::vector<DiagnosticsRecord>& rows, double t_before);

struct StabilityPoint {
    double lambda = 0.0;
    double Gamma = 0.0;
    double sigma = 0.0;
};

// Dense scan of the BF instability condition over lambda in (0, lambda_max].
std::vector<StabilityPoint> run_stability_map(const PhysicalParams& p, double lambda_max,
                                              double dlambda);

struct GrowthFit {
    bool window_found = false;
    double sigma_fit = 0.0;   // least-squares slope of log amplitude
    double sigma_pred = 0.0;  // sqrt(alpha) from the linear stability condition
    double t_center = 0.0;    // center of the fitting window
};

// Least-squares fit of d/dt log(amp) on the linear-growth window: from the
// moment the amplitude has grown 3x over its starting level until it reaches
// a third of the carrier amplitude (pump depletion sets in beyond that). No
// window is reported when the signal never triples.
GrowthFit fit_growth_rate(const std::vector<double>& t, const std::vector<double>& amp,
                          double carrier_amp = 0.0);  // <= 0: no depletion cap

// Envelope-only run sampling |u_hat(lambda_pert)|(t), then fit_growth_rate.
GrowthFit measure_growth(const ScenarioConfig& cfg);

// --- CSV output --------------------------------------------------------------

void write_series_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows);
void write_stability_csv(const std::string& path, const std::vector<StabilityPoint>& pts);
void write_surface_csv(const std::string& path, const SpectralGrid& g, const RealField& eta,
                       const RealField& xi);
void write_envelope_csv(const std::string& path, const SpectralGrid& g, const ComplexField& u);

}  // namespace vw
