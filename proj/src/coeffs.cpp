#include "vorwave/coeffs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vw {

namespace {
constexpr double pi = std::numbers::pi;

double sgn(double k) { return k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0); }
}  // namespace

double omega_k(double k, double g, double gamma) {
    return std::sqrt(gamma * gamma / 4.0 + g * std::abs(k));
}

double Omega_k(double k, double g, double gamma) {
    return gamma / 2.0 * sgn(k) + omega_k(k, g, gamma);
}

double a_k(double k, double g, double gamma) {
    if (k == 0.0) throw std::domain_error("a_k: k must be nonzero");
    return std::sqrt(omega_k(k, g, gamma) / std::abs(k));
}

double surface_to_envelope_amp(double A0, double k0, double g, double gamma) {
    return A0 * std::sqrt(omega_k(k0, g, gamma) / (2.0 * k0));
}

double envelope_to_surface_amp(double B0, double k0, double g, double gamma) {
    return B0 / std::sqrt(omega_k(k0, g, gamma) / (2.0 * k0));
}

ModelCoefficients compute_coefficients(const PhysicalParams& p) {
    const double g = p.g, gam = p.gamma, k0 = p.k0;
    ModelCoefficients c;
    c.k0 = k0;
    c.omega0 = omega_k(k0, g, gam);
    c.Omega0 = Omega_k(k0, g, gam);
    c.cg = g / (2.0 * c.omega0);
    c.A0 = envelope_to_surface_amp(p.B0, k0, g, gam);
    c.eps = k0 * c.A0;

    const double w0 = c.omega0, O0 = c.Omega0;
    c.beta0 = k0 * k0 * k0 * (w0 - gam) * (gam * gam + 4.0 * w0 * w0) /
              (2.0 * w0 * O0 * (2.0 * w0 - gam));
    c.beta3 = k0 * k0 * w0 * w0 / (O0 * O0);

    const double w2 = omega_k(2.0 * k0, g, gam);
    const double O2p = gam / 2.0 + w2;   // Omega(+2 k0)
    const double O2m = -gam / 2.0 + w2;  // Omega(-2 k0)

    c.c0l = k0 * k0 * k0 * O0 * O0 / (8.0 * pi * w0 * w0);
    c.c0r = 3.0 * k0 * k0 * O0 * O0 / (16.0 * pi * w0 * w0) -
            gam * g * k0 * k0 * k0 * O0 / (32.0 * pi * w0 * w0 * w0 * w0);

    const double q1 = 2.0 * w0 * w0 + gam * w2;
    c.c1l = k0 * k0 * k0 * q1 * q1 / (16.0 * pi * w0 * w0 * w2 * (2.0 * O0 + O2m));
    c.c1r = g * c.c1l *
            (2.0 * O2p / (w2 * q1) - 1.0 / (2.0 * w0 * w0) - 1.0 / (2.0 * w2 * w2) +
             3.0 / (2.0 * g * k0) - (w2 + w0) / (2.0 * w2 * w0 * (2.0 * O0 + O2m)));

    const double q2 = 2.0 * w0 * w0 - gam * w2;
    c.c2l = -k0 * k0 * k0 * q2 * q2 / (16.0 * pi * w0 * w0 * w2 * (2.0 * O0 - O2p));
    c.c2r = g * c.c2l *
            (2.0 * O2m / (w2 * q2) - 1.0 / (2.0 * w0 * w0) - 1.0 / (2.0 * w2 * w2) +
             3.0 / (2.0 * g * k0) - (w2 - w0) / (2.0 * w2 * w0 * (2.0 * O0 - O2p)));

    c.c3l = gam * gam * k0 * k0 * w0 / (2.0 * pi * g * O0);
    c.c3r1 = c.c3l * (1.0 / k0 + g * gam / (8.0 * O0 * w0 * w0));
    c.c3r2 = k0 * k0 * w0 * w0 / (2.0 * pi * O0 * O0);

    c.beta = 8.0 * pi * (c.c0r - 0.5 * (c.c1r + c.c2r + c.c3r1));
    return c;
}

double kernel_S(double k1, double k2, double k3, double g, double gam) {
    const double a1 = a_k(k1, g, gam), a2 = a_k(k2, g, gam), a3 = a_k(k3, g, gam);
    return (1.0 + sgn(k1) * sgn(k3)) / (a1 * a2 * a3) *
           (k1 * k3 * a1 * a1 * a3 * a3 - gam / 2.0 * k2 * a2 * a2);
}

double kernel_A(double k1, double k2, double k3, double g, double gam) {
    return (kernel_S(k1, k2, k3, g, gam) + kernel_S(k3, k1, k2, g, gam) -
            kernel_S(k2, k3, k1, g, gam)) /
           (8.0 * std::sqrt(pi));
}

namespace {

double kernel_D1(double k1, double k2, double k3, double k4, double g, double gam) {
    const double a1 = a_k(k1, g, gam), a2 = a_k(k2, g, gam);
    const double a3 = a_k(k3, g, gam), a4 = a_k(k4, g, gam);
    return a1 * a4 / (32.0 * pi * a2 * a3) * std::abs(k1) * std::abs(k4) *
           (std::abs(k1) + std::abs(k4) - 2.0 * std::abs(k3 + k4));
}

double kernel_D2(double k1, double k2, double k3, double k4, double g, double gam) {
    const double a1 = a_k(k1, g, gam), a2 = a_k(k2, g, gam);
    const double a3 = a_k(k3, g, gam), a4 = a_k(k4, g, gam);
    return gam * a1 / (32.0 * pi * a2 * a3 * a4) * std::abs(k1) * sgn(k4) *
           (std::abs(k1) + std::abs(k4) - std::abs(k3 + k4) - std::abs(k3 + k1));
}

double kernel_D3(double k1, double k2, double k3, double k4, double g, double gam) {
    const double a1 = a_k(k1, g, gam), a2 = a_k(k2, g, gam);
    const double a3 = a_k(k3, g, gam), a4 = a_k(k4, g, gam);
    return gam * gam / (128.0 * pi * a1 * a2 * a3 * a4) * sgn(k1) * sgn(k4) *
           (std::abs(k1) + std::abs(k4) - 2.0 * std::abs(k3 + k4));
}

}  // namespace

double kernel_T1(double k1, double k2, double k3, double k4, double g, double gam) {
    // six index patterns, with their signs for the D^(1), D^(2), D^(3) pieces
    const double p[6][4] = {
        {k1, k2, -k3, -k4}, {-k4, -k3, k2, k1}, {k1, -k3, k2, -k4},
        {-k4, k2, -k3, k1}, {k1, -k4, -k3, k2}, {-k4, k2, k1, -k3},
    };
    const double s1[6] = {-1, -1, -1, -1, +1, +1};
    const double s2[6] = {+1, -1, +1, -1, +1, -1};
    double t = 0.0;
    for (int i = 0; i < 6; ++i) {
        t += s1[i] * kernel_D1(p[i][0], p[i][1], p[i][2], p[i][3], g, gam);
        t += s2[i] * kernel_D2(p[i][0], p[i][1], p[i][2], p[i][3], g, gam);
        t += kernel_D3(p[i][0], p[i][1], p[i][2], p[i][3], g, gam);
    }
    return t;
}

double kernel_T2_1(double k1, double k2, double k3, double k4, double g, double gam) {
    const double q12 = -(k1 + k2), q34 = -(k3 + k4);
    const double b1 = kernel_S(q12, k1, k2, g, gam) + kernel_S(k2, q12, k1, g, gam) +
                      kernel_S(k1, k2, q12, g, gam);
    const double b2 = kernel_S(q34, k3, k4, g, gam) + kernel_S(k4, q34, k3, g, gam) +
                      kernel_S(k3, k4, q34, g, gam);
    return b1 * b2 / (64.0 * pi) *
           (1.0 / (Omega_k(k1, g, gam) + Omega_k(k2, g, gam) + Omega_k(q12, g, gam)) +
            1.0 / (Omega_k(k3, g, gam) + Omega_k(k4, g, gam) + Omega_k(q34, g, gam)));
}

double kernel_T2_2(double k1, double k2, double k3, double k4, double g, double gam) {
    return -kernel_A(-k1, -k2, k1 + k2, g, gam) * kernel_A(-k3, -k4, k3 + k4, g, gam) *
           (1.0 / (Omega_k(k1, g, gam) + Omega_k(k2, g, gam) - Omega_k(k1 + k2, g, gam)) +
            1.0 / (Omega_k(k3, g, gam) + Omega_k(k4, g, gam) - Omega_k(k3 + k4, g, gam)));
}

double kernel_T2_3(double k1, double k2, double k3, double k4, double g, double gam) {
    return 4.0 * kernel_A(k1 - k3, -k1, k3, g, gam) * kernel_A(k4 - k2, -k4, k2, g, gam) *
           (1.0 / (Omega_k(k3 - k1, g, gam) + Omega_k(k1, g, gam) - Omega_k(k3, g, gam)) +
            1.0 / (Omega_k(k2 - k4, g, gam) + Omega_k(k4, g, gam) - Omega_k(k2, g, gam)));
}

double kernel_T(double k1, double k2, double k3, double k4, double g, double gam) {
    return kernel_T1(k1, k2, k3, k4, g, gam) -
           0.5 * (kernel_T2_1(k1, k2, k3, k4, g, gam) + kernel_T2_2(k1, k2, k3, k4, g, gam) +
                  kernel_T2_3(k1, k2, k3, k4, g, gam));
}

double symmetrized_kernel(double (*kernel)(double, double, double, double, double, double),
                          double k1, double k2, double k3, double k4, double g, double gam) {
    const double p[4][4] = {
        {k1, k2, k3, k4}, {k2, k1, k3, k4}, {k1, k2, k4, k3}, {k2, k1, k4, k3}};
    double t = 0.0;
    for (auto& q : p) {
        t += kernel(q[0], q[1], q[2], q[3], g, gam);
        t += kernel(q[2], q[3], q[0], q[1], g, gam);
    }
    return t / 8.0;
}

GrowthRate bf_growth_rate(const ModelCoefficients& c, double g, double B0, double lambda) {
    GrowthRate r;
    const double disp = g * g / (8.0 * c.omega0 * c.omega0 * c.omega0);
    r.Gamma = 2.0 * B0 * B0 * (c.beta0 - c.eps * c.beta3 * std::abs(lambda)) -
              disp * lambda * lambda;
    r.alpha = disp * lambda * lambda * r.Gamma;
    r.sigma = r.alpha > 0.0 ? std::sqrt(r.alpha) : 0.0;
    return r;
}

}  // namespace vw
