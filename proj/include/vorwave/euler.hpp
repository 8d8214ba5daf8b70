#pragma once
// Fully nonlinear solver for deep-water gravity waves with constant vorticity,
// in surface variables (eta, xi):
//
//   dt eta = G(eta) xi + gamma eta dx eta
//   dt xi  = -g eta - (dx xi)^2/2
//            + [G(eta) xi + (dx eta)(dx xi)]^2 / (2 (1 + (dx eta)^2))
//            + gamma eta dx xi + gamma dxinv G(eta) xi
//
// Time stepping: RK4 with an integrating factor; the linear part
// (dt eta = |D| xi, dt xi = -g eta + gamma dxinv |D| xi) is advanced exactly
// per Fourier mode through its 2x2 matrix exponential.

#include "vorwave/coeffs.hpp"
#include "vorwave/dno.hpp"
#include "vorwave/spectral.hpp"

namespace vw {

struct SurfaceState {
    RealField eta;
    RealField xi;
};

struct SurfaceRhs {
    RealField deta;
    RealField dxi;
};

SurfaceRhs rhs_full(const SpectralGrid& g, double grav, double gamma, int dno_order,
                    const RealField& eta, const RealField& xi);

class EulerStepper {
  public:
    EulerStepper(const SpectralGrid& g, double grav, double gamma, int dno_order, double dt);

    void step(SurfaceState& s) const;
    double dt() const { return dt_; }

    // spectral-space state used internally; exposed for the harness hot loop
    struct Spec {
        RSpec eta, xi;
    };
    Spec lift(const SurfaceState& s) const;
    SurfaceState lower(const Spec& s) const;
    void step(Spec& s) const;

  private:
    struct Propagator {
        // 2x2 complex matrix exp per mode k = 0..n/2
        std::vector<cd> e11, e12, e21, e22;
    };
    Propagator make_propagator(double t) const;
    Spec rhs_nonlinear(const Spec& s) const;

    const SpectralGrid& grid_;
    double grav_, gamma_, dt_;
    DnoOperator dno_;
    Propagator full_, half_;
    std::vector<double> nu_;  // sponge damping rate per mode
};

// Energy in the non-canonical variables:
//   H = 1/2 int [ xi G(eta) xi - gamma eta^2 dx xi + gamma^2/3 eta^3 + g eta^2 ] dx
double energy_full(const SpectralGrid& g, double grav, double gamma, int dno_order,
                   const RealField& eta, const RealField& xi);

// Same energy evaluated through the canonical pair (eta, zeta):
//   H = 1/2 int [ w G(eta) w - gamma eta^2 dx zeta - gamma^2/6 eta^3 + g eta^2 ] dx,
//   w = zeta + gamma/2 dxinv eta
double energy_canonical(const SpectralGrid& g, double grav, double gamma, int dno_order,
                        const RealField& eta, const RealField& zeta);

// I = int (eta dx xi - gamma eta^2 / 2) dx
double momentum(const SpectralGrid& g, double gamma, const RealField& eta,
                const RealField& xi);

// V = int eta dx
double volume(const SpectralGrid& g, const RealField& eta);

// zeta = xi - gamma/2 dxinv eta, and back
RealField xi_to_zeta(const SpectralGrid& g, double gamma, const RealField& eta,
                     const RealField& xi);
RealField zeta_to_xi(const SpectralGrid& g, double gamma, const RealField& eta,
                     const RealField& zeta);

// z = (a(D) eta + i a(D)^{-1} zeta) / sqrt(2); k = 0 mode is zeroed
ComplexField to_complex_z(const SpectralGrid& g, double grav, double gamma,
                          const RealField& eta, const RealField& zeta);

// Inverse of to_complex_z: eta_k = (z_k + conj(z_{-k})) / (sqrt(2) a_k),
// zeta_k = a_k (z_k - conj(z_{-k})) / (i sqrt(2)); returned pair in
// (eta, zeta) form with the k = 0 mode zeroed.
struct CanonicalPair {
    RealField eta;
    RealField zeta;
};
CanonicalPair from_complex_z(const SpectralGrid& g, double grav, double gamma,
                             const ComplexField& z);

}  // namespace vw
