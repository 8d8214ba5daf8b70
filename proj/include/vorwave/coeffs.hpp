#pragma once
// Dispersion relation, quartic interaction kernels and the envelope-model
// coefficient ladder for deep-water gravity waves with constant vorticity.

namespace vw {

// omega(k) = sqrt(gamma^2/4 + g|k|)
double omega_k(double k, double g, double gamma);
// Omega(k) = (gamma/2) sgn(k) + omega(k), with sgn(0) = 0
double Omega_k(double k, double g, double gamma);
// a(k) = sqrt(omega(k)/|k|), k != 0
double a_k(double k, double g, double gamma);

struct PhysicalParams {
    double g = 1.0;
    double gamma = 0.0;
    double k0 = 10.0;
    double B0 = 0.002;  // carrier envelope amplitude (absorbed scaling)
};

// Carrier amplitude conversions: B0 = A0 * sqrt(omega0 / (2 k0)).
double surface_to_envelope_amp(double A0, double k0, double g, double gamma);
double envelope_to_surface_amp(double B0, double k0, double g, double gamma);

struct ModelCoefficients {
    double k0 = 0.0;                    // carrier wavenumber
    double omega0 = 0.0, Omega0 = 0.0;  // carrier frequencies
    double cg = 0.0;                    // group speed g/(2 omega0)
    double eps = 0.0;                   // steepness k0 * A0
    double A0 = 0.0;                    // surface amplitude matching B0
    double beta0 = 0.0;                 // cubic coefficient
    double beta3 = 0.0;                 // nonlocal coefficient k0^2 omega0^2 / Omega0^2
    double beta = 0.0;                  // cubic-gradient coefficient
    // ladder entries feeding beta and the kernel limit tests
    double c0l = 0.0, c0r = 0.0;
    double c1l = 0.0, c1r = 0.0;
    double c2l = 0.0, c2r = 0.0;
    double c3l = 0.0, c3r1 = 0.0, c3r2 = 0.0;
};

ModelCoefficients compute_coefficients(const PhysicalParams& p);

// Quartic kernels entering the reduced fourth-order Hamiltonian. All k_j must
// be nonzero where a(k) appears; the modulational regime keeps them near k0.
double kernel_S(double k1, double k2, double k3, double g, double gamma);
double kernel_A(double k1, double k2, double k3, double g, double gamma);
double kernel_T1(double k1, double k2, double k3, double k4, double g, double gamma);
double kernel_T2_1(double k1, double k2, double k3, double k4, double g, double gamma);
double kernel_T2_2(double k1, double k2, double k3, double k4, double g, double gamma);
double kernel_T2_3(double k1, double k2, double k3, double k4, double g, double gamma);
// T = T1 - (T2_1 + T2_2 + T2_3)/2
double kernel_T(double k1, double k2, double k3, double k4, double g, double gamma);

// Average of a kernel over the index rearrangements admissible under the
// constraint k1 + k2 = k3 + k4 (1<->2, 3<->4 and pair swap).
double symmetrized_kernel(double (*kernel)(double, double, double, double, double, double),
                          double k1, double k2, double k3, double k4, double g, double gamma);

struct GrowthRate {
    double Gamma = 0.0;  // 2 B0^2 (beta0 - eps beta3 |lambda|) - g^2/(8 omega0^3) lambda^2
    double alpha = 0.0;  // g^2/(8 omega0^3) lambda^2 Gamma
    double sigma = 0.0;  // sqrt(alpha) when unstable, else 0
};

GrowthRate bf_growth_rate(const ModelCoefficients& c, double g, double B0, double lambda);

}  // namespace vw
