#pragma once
// Weakly nonlinear envelope model (Dysthe-type) for the first harmonic u of a
// modulated wave train with carrier k0, on the periodic domain [0, 2*pi):
//
//   i dt u = Omega0 u - i (g/(2 w0)) dx u + (g^2/(8 w0^3)) dx^2 u
//            + beta0 |u|^2 u + i (g^3/(16 w0^5)) dx^3 u
//            - i beta |u|^2 dx u - beta3 u |D| |u|^2 ,
//
// with w0 = omega(k0). Variants replace the linear symbol: FullDispersion
// keeps Omega(k0 + D) exactly; MovingFrame drops the Omega0 and advection
// terms (envelope seen from a frame moving at the group speed, carrier phase
// removed). Time stepping matches the surface solver: integrating factor for
// the (diagonal) linear part plus RK4 for the rest.

#include "vorwave/coeffs.hpp"
#include "vorwave/spectral.hpp"

namespace vw {

enum class DystheVariant {
    Narrowband,      // cubic Taylor expansion of the dispersion about k0
    FullDispersion,  // exact linear symbol Omega(k0 + lambda)
    MovingFrame,     // narrowband minus (Omega0 + group advection)
};

// Linear symbol S(lambda) of the variant; the linear flow is e^{-i S t} per mode.
double dysthe_symbol(DystheVariant v, const ModelCoefficients& c, double g, double gamma,
                     double lambda);

// Full right-hand side du/dt (linear + nonlinear), mostly for testing.
ComplexField dysthe_rhs(const SpectralGrid& g, DystheVariant v, const ModelCoefficients& c,
                        double grav, double gamma, const ComplexField& u);

class EnvelopeStepper {
  public:
    EnvelopeStepper(const SpectralGrid& g, DystheVariant v, const PhysicalParams& p, double dt);

    // state is the spectrum of u (FFT order); step advances by dt
    ComplexField lift(const ComplexField& u) const;
    ComplexField lower(const ComplexField& cu) const;
    void step(ComplexField& cu) const;
    double dt() const { return dt_; }
    const ModelCoefficients& coefficients() const { return coeffs_; }

  private:
    ComplexField rhs_nonlinear(const ComplexField& cu) const;

    const SpectralGrid& grid_;
    DystheVariant variant_;
    double grav_, gamma_, dt_;
    ModelCoefficients coeffs_;
    std::vector<cd> full_, half_;  // e^{-i S dt}, e^{-i S dt/2}
};

// Conserved Hamiltonian of the variant:
//   int [ Omega0 |u|^2 + (g/(2 w0)) Im(conj(u) dx u) - (g^2/(8 w0^3)) |dx u|^2
//         + (beta0/2) |u|^4 - (g^3/(16 w0^5)) Im(conj(u) dx^3 u)
//         + (beta/2) |u|^2 Im(conj(u) dx u) - (beta3/2) |u|^2 |D| |u|^2 ] dX,
// with the quadratic part replaced by the variant's own linear symbol.
double reduced_hamiltonian(const SpectralGrid& g, DystheVariant v, const ModelCoefficients& c,
                           double grav, double gamma, const ComplexField& u);

// Wave action M = int |u|^2 dX (conserved by phase invariance).
double action(const SpectralGrid& g, const ComplexField& u);

// Momentum carried by the envelope: int [ k0 |u|^2 + Im(conj(u) dx u) ] dX.
double envelope_momentum(const SpectralGrid& g, double k0, const ComplexField& u);

// Uniform Stokes envelope u0(t) = B0 e^{-i (Omega0 + beta0 B0^2) t}.
cd stokes_envelope(const ModelCoefficients& c, double B0, double t);

// Perturbed Stokes initial condition u(x,0) = B0 (1 + 0.1 cos(lambda x)).
ComplexField initial_envelope(const SpectralGrid& g, double B0, double lambda);

}  // namespace vw
