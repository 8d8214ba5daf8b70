#include "vorwave/envelope.hpp"

#include <cmath>
#include <numbers>

namespace vw {

namespace {

constexpr cd I{0.0, 1.0};

double p_coef(double g, double w0) { return g * g / (8.0 * w0 * w0 * w0); }
double s_coef(double g, double w0) { return g * g * g / (16.0 * std::pow(w0, 5)); }

}  // namespace

double dysthe_symbol(DystheVariant v, const ModelCoefficients& c, double g, double gamma,
                     double lambda) {
    switch (v) {
        case DystheVariant::FullDispersion:
            return Omega_k(c.k0 + lambda, g, gamma);
        case DystheVariant::Narrowband:
            return c.Omega0 + c.cg * lambda - p_coef(g, c.omega0) * lambda * lambda +
                   s_coef(g, c.omega0) * lambda * lambda * lambda;
        case DystheVariant::MovingFrame:
            return -p_coef(g, c.omega0) * lambda * lambda +
                   s_coef(g, c.omega0) * lambda * lambda * lambda;
    }
    return 0.0;
}

namespace {

// Nonlinear tendency du/dt = -i (beta0 |u|^2 u - i beta |u|^2 dx u
//                               - beta3 u |D| |u|^2), spectrum in, spectrum out.
ComplexField nonlinear_spec(const SpectralGrid& g, const ModelCoefficients& c,
                            const ComplexField& cu) {
    const ComplexField u = from_spectrum(g, cu);
    ComplexField ubar(g.n), dxu;
    {
        ComplexField cdx(g.n);
        for (int j = 0; j < g.n; ++j) cdx[j] = I * g.k[j] * cu[j];
        dxu = from_spectrum(g, cdx);
    }
    for (int j = 0; j < g.n; ++j) ubar[j] = std::conj(u[j]);
    // |u|^2, dealiased and mirrored through |D| for the nonlocal term
    const ComplexField usq = dealiased_product(g, u, ubar);
    ComplexField cusq = to_spectrum(g, usq);
    ComplexField cabs(g.n);
    for (int j = 0; j < g.n; ++j) cabs[j] = std::abs(g.k[j]) * cusq[j];
    const ComplexField adusq = from_spectrum(g, cabs);

    ComplexField q1 = dealiased_product(g, usq, u);
    ComplexField q2 = dealiased_product(g, usq, dxu);
    ComplexField q3 = dealiased_product(g, adusq, u);
    ComplexField out(g.n);
    for (int j = 0; j < g.n; ++j)
        out[j] = -I * (c.beta0 * q1[j] - I * c.beta * q2[j] - c.beta3 * q3[j]);
    ComplexField cout = to_spectrum(g, out);
    truncate_spectrum(g, cout);
    return cout;
}

}  // namespace

ComplexField dysthe_rhs(const SpectralGrid& g, DystheVariant v, const ModelCoefficients& c,
                        double grav, double gamma, const ComplexField& u) {
    ComplexField cu = to_spectrum(g, u);
    truncate_spectrum(g, cu);
    ComplexField out = nonlinear_spec(g, c, cu);
    for (int j = 0; j < g.n; ++j)
        out[j] += -I * dysthe_symbol(v, c, grav, gamma, g.k[j]) * cu[j];
    return from_spectrum(g, out);
}

EnvelopeStepper::EnvelopeStepper(const SpectralGrid& g, DystheVariant v,
                                 const PhysicalParams& p, double dt)
    : grid_(g), variant_(v), grav_(p.g), gamma_(p.gamma), dt_(dt),
      coeffs_(compute_coefficients(p)), full_(g.n), half_(g.n) {
    for (int j = 0; j < g.n; ++j) {
        const double s = dysthe_symbol(v, coeffs_, grav_, gamma_, g.k[j]);
        full_[j] = std::exp(-I * s * dt);
        half_[j] = std::exp(-I * s * (dt / 2.0));
    }
}

ComplexField EnvelopeStepper::lift(const ComplexField& u) const {
    ComplexField cu = to_spectrum(grid_, u);
    truncate_spectrum(grid_, cu);
    return cu;
}

ComplexField EnvelopeStepper::lower(const ComplexField& cu) const {
    return from_spectrum(grid_, cu);
}

ComplexField EnvelopeStepper::rhs_nonlinear(const ComplexField& cu) const {
    return nonlinear_spec(grid_, coeffs_, cu);
}

void EnvelopeStepper::step(ComplexField& cu) const {
    // Lawson RK4: exact linear flow between nonlinear stage evaluations
    const int n = grid_.n;
    ComplexField k1 = rhs_nonlinear(cu);
    ComplexField y(n);
    for (int j = 0; j < n; ++j) y[j] = half_[j] * (cu[j] + dt_ / 2.0 * k1[j]);
    ComplexField k2 = rhs_nonlinear(y);
    for (int j = 0; j < n; ++j) y[j] = half_[j] * cu[j] + dt_ / 2.0 * k2[j];
    ComplexField k3 = rhs_nonlinear(y);
    for (int j = 0; j < n; ++j) y[j] = full_[j] * cu[j] + dt_ * half_[j] * k3[j];
    ComplexField k4 = rhs_nonlinear(y);
    for (int j = 0; j < n; ++j)
        cu[j] = full_[j] * cu[j] +
                dt_ / 6.0 * (full_[j] * k1[j] + 2.0 * half_[j] * (k2[j] + k3[j]) + k4[j]);
}

double reduced_hamiltonian(const SpectralGrid& g, DystheVariant v, const ModelCoefficients& c,
                           double grav, double gamma, const ComplexField& u) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    ComplexField cu = to_spectrum(g, u);
    truncate_spectrum(g, cu);
    // quadratic part through the variant's linear symbol
    double h = 0.0;
    for (int j = 0; j < g.n; ++j)
        h += dysthe_symbol(v, c, grav, gamma, g.k[j]) * std::norm(cu[j]);
    h *= two_pi;
    // cubic/quartic part, common to all variants
    const ComplexField uu = from_spectrum(g, cu);
    ComplexField cdx(g.n), cabs(g.n);
    ComplexField ubar(g.n);
    for (int j = 0; j < g.n; ++j) {
        cdx[j] = I * g.k[j] * cu[j];
        ubar[j] = std::conj(uu[j]);
    }
    const ComplexField dxu = from_spectrum(g, cdx);
    const ComplexField usq = dealiased_product(g, uu, ubar);
    ComplexField cusq = to_spectrum(g, usq);
    for (int j = 0; j < g.n; ++j) cabs[j] = std::abs(g.k[j]) * cusq[j];
    const ComplexField adusq = from_spectrum(g, cabs);
    RealField q(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double a2 = usq[j].real();
        q[j] = 0.5 * c.beta0 * a2 * a2 +
               0.5 * c.beta * a2 * (ubar[j] * dxu[j]).imag() -
               0.5 * c.beta3 * a2 * adusq[j].real();
    }
    return h + integrate(g, q);
}

double action(const SpectralGrid& g, const ComplexField& u) {
    RealField a(g.n);
    for (int j = 0; j < g.n; ++j) a[j] = std::norm(u[j]);
    return integrate(g, a);
}

double envelope_momentum(const SpectralGrid& g, double k0, const ComplexField& u) {
    ComplexField cu = to_spectrum(g, u);
    ComplexField cdx(g.n);
    for (int j = 0; j < g.n; ++j) cdx[j] = I * g.k[j] * cu[j];
    const ComplexField dxu = from_spectrum(g, cdx);
    RealField q(g.n);
    for (int j = 0; j < g.n; ++j)
        q[j] = k0 * std::norm(u[j]) + (std::conj(u[j]) * dxu[j]).imag();
    return integrate(g, q);
}

cd stokes_envelope(const ModelCoefficients& c, double B0, double t) {
    return B0 * std::exp(-I * (c.Omega0 + c.beta0 * B0 * B0) * t);
}

ComplexField initial_envelope(const SpectralGrid& g, double B0, double lambda) {
    ComplexField u(g.n);
    for (int j = 0; j < g.n; ++j) u[j] = B0 * (1.0 + 0.1 * std::cos(lambda * g.x[j]));
    return u;
}

}  // namespace vw
