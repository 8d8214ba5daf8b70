#pragma once
// Third-order Birkhoff normal form machinery: the auxiliary flow in the
// parameter s generated by K^(3), envelope <-> surface reconstruction, and the
// Hamiltonian functionals used to cross-check it (quadratic, cubic, and K^(3)
// in both physical and spectral form).
//
// The tendencies are the literal variational derivatives of K^(3); inverse
// Fourier multipliers appearing in them have their k = 0 component set to
// zero, consistent with the zero-mass assumption on eta.

#include "vorwave/spectral.hpp"

namespace vw {

struct CanonicalState {
    RealField eta;
    RealField zeta;
};

struct CanonicalRhs {
    RealField deta;
    RealField dzeta;
};

CanonicalRhs k3_rhs(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                    const RealField& zeta);

// RK4 integration of the auxiliary system from s_from to s_to with |ds| step.
CanonicalState k3_flow(const SpectralGrid& g, double grav, double gamma, CanonicalState s,
                       double s_from, double s_to, double ds);

// Seed (eta, zeta)|_{s=0} from the envelope and flow to s = -1:
//   eta|_0  = a(D)^{-1} (u e^{i k0 x} + conj) / sqrt(2)
//   zeta|_0 = a(D) (u e^{i k0 x} - conj) / (i sqrt(2))
CanonicalState envelope_to_surface(const SpectralGrid& g, double grav, double gamma,
                                   double k0, const ComplexField& u, double ds);

// Inverse: flow (eta, zeta) from s = -1 to s = 0, form z, demodulate by k0.
ComplexField surface_to_envelope(const SpectralGrid& g, double grav, double gamma, double k0,
                                 const CanonicalState& s, double ds);

// First-harmonic reconstruction only (the s = 0 seed, no flow).
CanonicalState partial_reconstruct(const SpectralGrid& g, double grav, double gamma, double k0,
                                   const ComplexField& u);

// The s = 0 seed itself, exposed for reuse.
CanonicalState reconstruction_seed(const SpectralGrid& g, double grav, double gamma,
                                   double k0, const ComplexField& u);

// --- Hamiltonian functionals -------------------------------------------------

// H2 = 1/2 int [ zeta |D| zeta + g eta^2 + gamma zeta H eta
//                + gamma^2/4 eta |D|^{-1} eta ] dx
double h2_quadratic(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                    const RealField& zeta);

// H2 through the diagonal form: 2 pi sum_k Omega_k |z_k|^2
double h2_diagonal(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta);

// Cubic Hamiltonian via the G^(1)-based physical form.
double h3_physical(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta);

// Cubic Hamiltonian as a triad sum over |k| <= g.kmax (oracle; O(n^2) cost,
// intended for small grids).
double h3_spectral(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta);

// K^(3), 14-term physical-space integral.
double k3_physical(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta);

// K^(3) as a triad sum (oracle, small grids).
double k3_spectral(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta);

}  // namespace vw
