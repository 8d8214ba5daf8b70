#include "vorwave/normalform.hpp"

#include "vorwave/coeffs.hpp"
#include "vorwave/euler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vw {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double sgn(double k) { return k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0); }

struct Work {
    const SpectralGrid& g;
    RSpec mul(const RSpec& a, const RSpec& b) const { return rspec_product(g, a, b); }
    RSpec mul(const Padded& a, const RSpec& b) const { return rspec_product(g, a, b); }
    RSpec H(const RSpec& c) const { return rspec_apply(g, Sym::Hilbert, c); }
    RSpec Dx(const RSpec& c) const { return rspec_apply(g, Sym::Deriv, c); }
    RSpec Dxi(const RSpec& c) const { return rspec_apply(g, Sym::DerivInv, c); }
    RSpec Ad(const RSpec& c) const { return rspec_apply(g, Sym::AbsD, c); }
    RSpec Adi(const RSpec& c) const { return rspec_apply(g, Sym::AbsDInv, c); }
};

void acc(RSpec& y, double a, const RSpec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

struct SpecState {
    RSpec eta, zeta;
};

SpecState k3_rhs_spec(const SpectralGrid& g, double grav, double gamma, const RSpec& eta,
                      const RSpec& zeta) {
    const Work w{g};
    const double ga = gamma;
    const RSpec et = w.H(eta), zt = w.H(zeta);
    const RSpec dxe = w.Dx(eta), dxz = w.Dx(zeta);
    const RSpec dxzt = w.Dx(zt), dxet = w.Dx(et);
    const RSpec ie = w.Dxi(eta), iet = w.Dxi(et);
    const Padded etp = rspec_pad(g, et);
    const Padded zp = rspec_pad(g, zeta);
    const Padded iep = rspec_pad(g, ie);

    // dt_s eta = dK3/dzeta
    RSpec re = w.H(w.Dx(w.mul(etp, et)));
    for (auto& v : re) v *= 0.5;
    {
        RSpec b(re.size(), cd(0, 0));
        acc(b, 1.0, w.mul(zp, dxe));
        acc(b, -1.0, w.mul(etp, dxzt));
        acc(b, -1.0, w.Ad(w.mul(zp, et)));
        acc(re, ga / (2 * grav), b);
    }
    {
        RSpec b(re.size(), cd(0, 0));
        acc(b, 1.0, w.mul(zp, dxzt));
        acc(b, 0.5, w.Ad(w.mul(zp, zeta)));
        acc(re, ga * ga / (4 * grav * grav), b);
    }
    {
        RSpec b(re.size(), cd(0, 0));
        acc(b, -1.0, w.mul(iep, dxe));
        acc(b, 1.0, w.H(w.mul(etp, eta)));
        acc(b, 1.0, w.Ad(w.mul(etp, ie)));
        acc(re, ga * ga / (4 * grav), b);
    }
    {
        RSpec b(re.size(), cd(0, 0));
        acc(b, 1.0, w.mul(zp, et));
        acc(b, 1.0, w.mul(iep, dxzt));
        acc(b, 1.0, w.Ad(w.mul(zp, ie)));
        acc(re, -ga * ga * ga / (8 * grav * grav), b);
    }
    {
        RSpec b(re.size(), cd(0, 0));
        acc(b, 1.0, w.H(w.mul(iep, eta)));
        acc(b, 1.0, w.mul(iep, et));
        acc(re, ga * ga * ga * ga / (16 * grav * grav), b);
    }

    // dt_s zeta = -dK3/deta
    RSpec rz = w.H(w.mul(etp, dxzt));
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.mul(etp, eta));
        RSpec e2 = w.mul(rspec_pad(g, eta), eta);
        acc(b, -0.5, w.H(e2));
        acc(rz, ga / 2, b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.mul(zp, dxz));
        acc(b, -1.0, w.H(w.mul(zp, dxzt)));
        acc(rz, ga / (2 * grav), b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.Dx(w.mul(zp, ie)));
        acc(b, 1.0, w.Dxi(w.mul(zp, dxe)));
        acc(b, -1.0, w.mul(rspec_pad(g, zt), et));
        acc(b, 1.0, w.H(w.mul(rspec_pad(g, eta), zt)));
        acc(b, -1.0, w.H(w.mul(iep, dxzt)));
        acc(b, -1.0, w.Dxi(w.mul(etp, dxzt)));
        acc(rz, -ga * ga / (4 * grav), b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.Dxi(w.mul(rspec_pad(g, dxet), iet)));
        acc(b, -1.0, w.Ad(w.mul(iep, iet)));
        acc(b, 1.0, w.Adi(w.mul(iep, dxet)));
        acc(rz, ga * ga * ga / (8 * grav), b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.H(w.mul(zp, zeta)));
        acc(b, 2.0, w.Dxi(w.mul(zp, dxzt)));
        acc(rz, -ga * ga * ga / (16 * grav * grav), b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.mul(iep, zt));
        acc(b, -1.0, w.Dxi(w.mul(rspec_pad(g, eta), zt)));
        acc(b, 1.0, w.H(w.mul(zp, ie)));
        acc(b, 1.0, w.Dxi(w.mul(zp, et)));
        acc(rz, ga * ga * ga * ga / (16 * grav * grav), b);
    }
    {
        RSpec b(rz.size(), cd(0, 0));
        acc(b, 1.0, w.H(w.mul(iep, ie)));
        acc(b, 2.0, w.Dxi(w.mul(etp, ie)));
        acc(rz, -ga * ga * ga * ga * ga / (64 * grav * grav), b);
    }

    // restrict to the zero-mass submanifold: the k = 0 tendencies are dropped
    re[0] = cd(0.0, 0.0);
    rz[0] = cd(0.0, 0.0);
    return {std::move(re), std::move(rz)};
}

SpecState lift(const SpectralGrid& g, const CanonicalState& s) {
    SpecState sp{rspec(g, s.eta), rspec(g, s.zeta)};
    rspec_truncate(g, sp.eta);
    rspec_truncate(g, sp.zeta);
    return sp;
}

SpecState flow_spec(const SpectralGrid& g, double grav, double gamma, SpecState s,
                    double s_from, double s_to, double ds) {
    const double span = s_to - s_from;
    if (span == 0.0) return s;
    const int nsteps = std::max(1, static_cast<int>(std::llround(std::abs(span) / ds)));
    const double h = span / nsteps;
    const size_t m = s.eta.size();
    auto add = [m](const SpecState& a, double c, const SpecState& b) {
        SpecState out = a;
        for (size_t i = 0; i < m; ++i) {
            out.eta[i] += c * b.eta[i];
            out.zeta[i] += c * b.zeta[i];
        }
        return out;
    };
    for (int i = 0; i < nsteps; ++i) {
        const SpecState f1 = k3_rhs_spec(g, grav, gamma, s.eta, s.zeta);
        const SpecState y2 = add(s, h / 2, f1);
        const SpecState f2 = k3_rhs_spec(g, grav, gamma, y2.eta, y2.zeta);
        const SpecState y3 = add(s, h / 2, f2);
        const SpecState f3 = k3_rhs_spec(g, grav, gamma, y3.eta, y3.zeta);
        const SpecState y4 = add(s, h, f3);
        const SpecState f4 = k3_rhs_spec(g, grav, gamma, y4.eta, y4.zeta);
        for (size_t j = 0; j < m; ++j) {
            s.eta[j] += h / 6.0 * (f1.eta[j] + 2.0 * f2.eta[j] + 2.0 * f3.eta[j] + f4.eta[j]);
            s.zeta[j] += h / 6.0 * (f1.zeta[j] + 2.0 * f2.zeta[j] + 2.0 * f3.zeta[j] + f4.zeta[j]);
        }
    }
    return s;
}

// modulate u by e^{i k0 x} and return the full spectrum of the product
ComplexField modulated_spectrum(const SpectralGrid& g, double k0, const ComplexField& u) {
    ComplexField cu = to_spectrum(g, u);
    truncate_spectrum(g, cu);
    ComplexField out(g.n, cd(0.0, 0.0));
    const int shift = static_cast<int>(std::llround(k0));
    for (int j = 0; j < g.n; ++j) {
        const int k = static_cast<int>(g.k[j]);
        if (std::abs(k) > g.kmax) continue;
        const int kk = k + shift;
        if (std::abs(kk) > g.n / 2 - 1) continue;
        out[(kk + g.n) % g.n] = cu[j];
    }
    return out;
}

}  // namespace

CanonicalRhs k3_rhs(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                    const RealField& zeta) {
    SpecState s = lift(g, {eta, zeta});
    SpecState r = k3_rhs_spec(g, grav, gamma, s.eta, s.zeta);
    return {rfield(g, r.eta), rfield(g, r.zeta)};
}

CanonicalState k3_flow(const SpectralGrid& g, double grav, double gamma, CanonicalState s,
                       double s_from, double s_to, double ds) {
    SpecState sp = flow_spec(g, grav, gamma, lift(g, s), s_from, s_to, ds);
    return {rfield(g, sp.eta), rfield(g, sp.zeta)};
}

CanonicalState reconstruction_seed(const SpectralGrid& g, double grav, double gamma,
                                   double k0, const ComplexField& u) {
    const ComplexField m = modulated_spectrum(g, k0, u);  // spectrum of u e^{i k0 x}
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    RSpec ceta(g.n / 2 + 1, cd(0.0, 0.0));
    RSpec czeta(g.n / 2 + 1, cd(0.0, 0.0));
    // eta_k = (m_k + conj(m_{-k})) a_k^{-1} / sqrt(2);
    // zeta_k = (m_k - conj(m_{-k})) a_k / (i sqrt(2))
    for (int k = 1; k <= g.n / 2; ++k) {
        if (k > g.kmax) break;
        const cd up = m[k];
        const cd um = std::conj(m[(g.n - k) % g.n]);
        const double a = a_k(k, grav, gamma);
        ceta[k] = inv_sqrt2 / a * (up + um);
        czeta[k] = inv_sqrt2 / cd(0.0, 1.0) * a * (up - um);
    }
    return {rfield(g, ceta), rfield(g, czeta)};
}

CanonicalState envelope_to_surface(const SpectralGrid& g, double grav, double gamma,
                                   double k0, const ComplexField& u, double ds) {
    CanonicalState seed = reconstruction_seed(g, grav, gamma, k0, u);
    return k3_flow(g, grav, gamma, std::move(seed), 0.0, -1.0, ds);
}

ComplexField surface_to_envelope(const SpectralGrid& g, double grav, double gamma, double k0,
                                 const CanonicalState& s, double ds) {
    CanonicalState at0 = k3_flow(g, grav, gamma, s, -1.0, 0.0, ds);
    ComplexField z = to_complex_z(g, grav, gamma, at0.eta, at0.zeta);
    // demodulate: u = z e^{-i k0 x}
    ComplexField cz = to_spectrum(g, z);
    ComplexField cu(g.n, cd(0.0, 0.0));
    const int shift = static_cast<int>(std::llround(k0));
    for (int j = 0; j < g.n; ++j) {
        const int k = static_cast<int>(g.k[j]);
        const int kk = k - shift;
        if (std::abs(kk) > g.n / 2 - 1) continue;
        cu[(kk + g.n) % g.n] = cz[j];
    }
    truncate_spectrum(g, cu);
    return from_spectrum(g, cu);
}

CanonicalState partial_reconstruct(const SpectralGrid& g, double grav, double gamma, double k0,
                                   const ComplexField& u) {
    return reconstruction_seed(g, grav, gamma, k0, u);
}

double h2_quadratic(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                    const RealField& zeta) {
    RSpec ce = rspec(g, eta), cz = rspec(g, zeta);
    const double t1 = rspec_inner(g, cz, rspec_apply(g, Sym::AbsD, cz));
    const double t2 = rspec_inner(g, ce, ce);
    const double t3 = rspec_inner(g, cz, rspec_apply(g, Sym::Hilbert, ce));
    const double t4 = rspec_inner(g, ce, rspec_apply(g, Sym::AbsDInv, ce));
    return 0.5 * (t1 + grav * t2 + gamma * t3 + gamma * gamma / 4.0 * t4);
}

double h2_diagonal(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta) {
    const ComplexField ce = to_spectrum(g, eta);
    const ComplexField cz = to_spectrum(g, zeta);
    double h = 0.0;
    const double inv2 = 0.5;
    for (int j = 0; j < g.n; ++j) {
        const double k = g.k[j];
        if (k == 0.0) continue;
        const double a = a_k(k, grav, gamma);
        const cd zk = std::sqrt(inv2) * (a * ce[j] + cd(0.0, 1.0) / a * cz[j]);
        h += Omega_k(k, grav, gamma) * std::norm(zk);
    }
    return two_pi * h;
}

double h3_physical(const SpectralGrid& g, double /*grav*/, double gamma, const RealField& eta,
                   const RealField& zeta) {
    // cubic part of the canonical Hamiltonian: 1/2 int w G^(1)(eta) w dx
    //   - gamma/2 int eta^2 dx zeta dx - gamma^2/12 int eta^3 dx,
    // with w = zeta + gamma/2 dxinv eta.
    const RealField ie = apply_symbol(g, Sym::DerivInv, eta);
    RealField w = zeta;
    for (int j = 0; j < g.n; ++j) w[j] += gamma / 2.0 * ie[j];
    // G^(1) w = D(eta D w) - |D|(eta |D| w) with D of symbol k. The sandwiched
    // intermediates D w, |D| w are complex for real w, so this stays in the
    // full-spectrum complex representation throughout.
    ComplexField cw = to_spectrum(g, w);
    ComplexField dw(g.n), aw(g.n);
    for (int j = 0; j < g.n; ++j) {
        dw[j] = g.k[j] * cw[j];
        aw[j] = std::abs(g.k[j]) * cw[j];
    }
    ComplexField etac(g.n);
    for (int j = 0; j < g.n; ++j) etac[j] = eta[j];
    ComplexField p1 = to_spectrum(g, dealiased_product(g, etac, from_spectrum(g, dw)));
    ComplexField p2 = to_spectrum(g, dealiased_product(g, etac, from_spectrum(g, aw)));
    RealField g1w(g.n);
    for (int j = 0; j < g.n; ++j) {
        p1[j] *= g.k[j];
        p2[j] *= std::abs(g.k[j]);
    }
    const ComplexField f1 = from_spectrum(g, p1), f2 = from_spectrum(g, p2);
    for (int j = 0; j < g.n; ++j) g1w[j] = (f1[j] - f2[j]).real();
    RealField q(g.n);
    const RealField dxz = apply_symbol(g, Sym::Deriv, zeta);
    for (int j = 0; j < g.n; ++j)
        q[j] = 0.5 * w[j] * g1w[j] - gamma / 2.0 * eta[j] * eta[j] * dxz[j] -
               gamma * gamma / 12.0 * eta[j] * eta[j] * eta[j];
    return integrate(g, q);
}

namespace {

// Fourier-series coefficient c_k of a real field, arbitrary integer k.
struct Coeffs {
    const SpectralGrid& g;
    ComplexField c;
    cd operator()(int k) const { return c[(k % g.n + g.n) % g.n]; }
};

}  // namespace

double h3_spectral(const SpectralGrid& g, double /*grav*/, double gamma, const RealField& eta,
                   const RealField& zeta) {
    const Coeffs e{g, to_spectrum(g, eta)}, z{g, to_spectrum(g, zeta)};
    const int km = g.kmax;
    cd tot(0.0, 0.0);
    for (int k1 = -km; k1 <= km; ++k1) {
        for (int k2 = -km; k2 <= km; ++k2) {
            const int k3 = -k1 - k2;
            if (std::abs(k3) > km) continue;
            const double f = 1.0 + sgn(k1) * sgn(k3);
            if (f == 0.0) continue;
            tot += f * (std::abs(double(k1)) * std::abs(double(k3)) * z(k1) * e(k2) * z(k3) +
                        cd(0.0, gamma * k2 / 2.0) * e(k1) * z(k2) * e(k3));
        }
    }
    const double norm = std::pow(two_pi, 1.5);
    return (-1.0 / (2.0 * std::sqrt(two_pi)) * norm * tot).real();
}

double k3_physical(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta) {
    // Dealiasing is deliberately not applied here: the functional is a plain
    // trapezoid-rule integral of pointwise products (cubic products of fields
    // kept under the 2/3 cutoff are exactly integrated by the trapezoid rule
    // only up to the usual spectral accuracy, which is what the oracle tests
    // probe on small grids).
    auto H = [&](const RealField& f) { return apply_symbol(g, Sym::Hilbert, f); };
    auto Dx = [&](const RealField& f) { return apply_symbol(g, Sym::Deriv, f); };
    auto Dxi = [&](const RealField& f) { return apply_symbol(g, Sym::DerivInv, f); };
    const RealField et = H(eta), zt = H(zeta);
    const RealField ie = Dxi(eta), iet = Dxi(et);
    const RealField dxzt = Dx(zt), dxe = Dx(eta), dxet = Dx(et);
    const double ga = gamma;
    RealField f(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double e = eta[j], z = zeta[j];
        f[j] = 0.5 * et[j] * et[j] * dxzt[j] -
               ga / (4 * grav) *
                   (grav * e * e * et[j] - z * z * dxe[j] + 2 * z * et[j] * dxzt[j]) -
               ga * ga / (4 * grav * grav) *
                   (grav * ie[j] * dxe[j] * z + grav * e * et[j] * zt[j] -
                    grav * et[j] * dxzt[j] * ie[j] - 0.5 * z * z * dxzt[j]) -
               ga * ga * ga / (16 * grav * grav) *
                   (z * z * et[j] + 2 * z * dxzt[j] * ie[j] -
                    2 * grav * ie[j] * dxet[j] * iet[j]) -
               std::pow(ga, 4) / (16 * grav * grav) * (e * zt[j] - et[j] * z) * ie[j] -
               std::pow(ga, 5) / (64 * grav * grav) * et[j] * ie[j] * ie[j];
    }
    return integrate(g, f);
}

double k3_spectral(const SpectralGrid& g, double grav, double gamma, const RealField& eta,
                   const RealField& zeta) {
    const Coeffs e{g, to_spectrum(g, eta)}, z{g, to_spectrum(g, zeta)};
    const int km = g.kmax;
    cd tot(0.0, 0.0);
    for (int k1 = -km; k1 <= km; ++k1) {
        if (k1 == 0) continue;
        for (int k2 = -km; k2 <= km; ++k2) {
            const int k3 = -k1 - k2;
            if (k3 == 0 || std::abs(k3) > km) continue;
            const double f = 1.0 + sgn(k1) * sgn(k3);
            if (f == 0.0) continue;
            const double ak1 = std::abs(double(k1)), ak2 = std::abs(double(k2)),
                         ak3 = std::abs(double(k3));
            const double w2 = omega_k(k2, grav, gamma), w3 = omega_k(k3, grav, gamma);
            const double g2 = grav * grav;
            const double pref =
                (std::pow(gamma, 4) / 8.0 + gamma * gamma / 2.0 * grav * ak2 + g2 * ak1 * ak3) /
                (g2 * ak1 * ak3);
            const cd t1 = -pref * (-gamma / 2.0 * sgn(k2) * e(k1) * e(k2) * e(k3) +
                                   cd(0.0, ak2) * e(k1) * z(k2) * e(k3) -
                                   cd(0.0, 2.0 * ak3) * e(k1) * e(k2) * z(k3));
            const cd t2 = gamma * sgn(k2) / (g2 * ak1 * ak3) *
                          (2.0 * w3 * w3 * ak1 * ak2 * z(k1) * z(k2) * e(k3) -
                           w2 * w2 * ak1 * ak3 * z(k1) * e(k2) * z(k3) +
                           cd(0.0, gamma * sgn(k2) / 2.0 * ak1 * ak2 * ak3) *
                               z(k1) * z(k2) * z(k3));
            tot += f * (t1 + t2);
        }
    }
    const double norm = std::pow(two_pi, 1.5);
    return (cd(0.0, -0.25) / std::sqrt(two_pi) * norm * tot).real();
}

}  // namespace vw
