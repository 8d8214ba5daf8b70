#include "vorwave/euler.hpp"

#include <cmath>

namespace vw {

namespace {

RSpec abs_d(const SpectralGrid& g, const RSpec& c) { return rspec_apply(g, Sym::AbsD, c); }
RSpec d_x(const SpectralGrid& g, const RSpec& c) { return rspec_apply(g, Sym::Deriv, c); }
RSpec d_xinv(const SpectralGrid& g, const RSpec& c) { return rspec_apply(g, Sym::DerivInv, c); }

void axpy(RSpec& y, double a, const RSpec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

EulerStepper::EulerStepper(const SpectralGrid& g, double grav, double gamma, int dno_order,
                           double dt)
    : grid_(g), grav_(grav), gamma_(gamma), dt_(dt), dno_(g, dno_order) {
    // Smooth low-pass sponge over the top quarter of the retained band. The
    // inviscid truncation alone lets energy pile up at the cutoff over long
    // integrations (it has nowhere to cascade); the sponge absorbs it at a
    // fixed rate per unit time, folded into the linear propagator. The
    // physical spectrum sits far below the ramp, which starts at 3 kmax / 4.
    const int nk = grid_.n / 2 + 1;
    nu_.assign(nk, 0.0);
    const double k1 = 0.75 * grid_.kmax;
    for (int k = 0; k < nk; ++k) {
        if (k <= k1) continue;
        const double s = (k - k1) / (grid_.kmax - k1);
        nu_[k] = 100.0 * s * s * s * s;
    }
    full_ = make_propagator(dt);
    half_ = make_propagator(dt / 2.0);
}

EulerStepper::Propagator EulerStepper::make_propagator(double t) const {
    const int nk = grid_.n / 2 + 1;
    Propagator p;
    p.e11.resize(nk);
    p.e12.resize(nk);
    p.e21.resize(nk);
    p.e22.resize(nk);
    // k = 0: M = [[0,0],[-g,0]], exp(M t) = I + M t
    p.e11[0] = 1.0;
    p.e12[0] = 0.0;
    p.e21[0] = -grav_ * t;
    p.e22[0] = 1.0;
    for (int k = 1; k < nk; ++k) {
        const double w = omega_k(k, grav_, gamma_);
        const cd lp(0.0, -gamma_ / 2.0 + w);   // i(-gamma/2 + omega)
        const cd lm(0.0, -gamma_ / 2.0 - w);   // -i Omega(k)
        const cd ep = std::exp(lp * t), em = std::exp(lm * t);
        const cd den = lp - lm;  // 2 i omega
        const cd migs(0.0, -gamma_);           // -i gamma sgn(k), k > 0
        p.e11[k] = (ep * (-lm) - em * (-lp)) / den;
        p.e12[k] = double(k) * (ep - em) / den;
        p.e21[k] = -grav_ * (ep - em) / den;
        p.e22[k] = (ep * (migs - lm) - em * (migs - lp)) / den;
        // sponge damping commutes with the 2x2 block, so it folds in exactly
        const double damp = std::exp(-nu_[k] * t);
        p.e11[k] *= damp;
        p.e12[k] *= damp;
        p.e21[k] *= damp;
        p.e22[k] *= damp;
    }
    return p;
}

EulerStepper::Spec EulerStepper::lift(const SurfaceState& s) const {
    Spec sp{rspec(grid_, s.eta), rspec(grid_, s.xi)};
    rspec_truncate(grid_, sp.eta);
    rspec_truncate(grid_, sp.xi);
    sp.eta[0] = 0.0;  // zero-mass assumption
    return sp;
}

SurfaceState EulerStepper::lower(const Spec& s) const {
    return {rfield(grid_, s.eta), rfield(grid_, s.xi)};
}

EulerStepper::Spec EulerStepper::rhs_nonlinear(const Spec& s) const {
    const SpectralGrid& g = grid_;
    const RSpec gxi = dno_.apply(s.eta, s.xi);
    const Padded eta_pad = rspec_pad(g, s.eta);
    const RSpec etax = d_x(g, s.eta);
    const RSpec xix = d_x(g, s.xi);

    Spec r;
    // dt eta - |D| xi = (G(eta) - G^(0)) xi + gamma eta dx eta
    r.eta = gxi;
    {
        const RSpec lin = abs_d(g, s.xi);
        for (size_t i = 0; i < r.eta.size(); ++i) r.eta[i] -= lin[i];
        RSpec adv = rspec_product(g, eta_pad, etax);
        axpy(r.eta, gamma_, adv);
        r.eta[0] = 0.0;
    }

    // quadratic and quotient terms of dt xi
    RSpec q = rspec_product(g, rspec_pad(g, etax), xix);
    for (size_t i = 0; i < q.size(); ++i) q[i] += gxi[i];
    RSpec q2 = rspec_product(g, q, q);
    // divide by (1 + (dx eta)^2) pointwise on the collocation grid
    RealField q2f = rfield(g, q2);
    const RealField etaxf = rfield(g, etax);
    for (int j = 0; j < g.n; ++j) q2f[j] /= 1.0 + etaxf[j] * etaxf[j];
    RSpec quot = rspec(g, q2f);
    rspec_truncate(g, quot);

    RSpec xix2 = rspec_product(g, xix, xix);
    r.xi = quot;
    for (size_t i = 0; i < r.xi.size(); ++i) r.xi[i] = 0.5 * r.xi[i] - 0.5 * xix2[i];
    RSpec etaxix = rspec_product(g, eta_pad, xix);
    axpy(r.xi, gamma_, etaxix);
    // gamma dxinv (G - G^(0)) xi
    RSpec gnl = gxi;
    {
        const RSpec lin = abs_d(g, s.xi);
        for (size_t i = 0; i < gnl.size(); ++i) gnl[i] -= lin[i];
    }
    RSpec ginv = d_xinv(g, gnl);
    axpy(r.xi, gamma_, ginv);
    return r;
}

void EulerStepper::step(Spec& s) const {
    const SpectralGrid& g = grid_;
    const int nk = g.n / 2 + 1;
    auto apply_prop = [&](const Propagator& p, const Spec& in) {
        Spec out;
        out.eta.resize(nk);
        out.xi.resize(nk);
        for (int k = 0; k < nk; ++k) {
            out.eta[k] = p.e11[k] * in.eta[k] + p.e12[k] * in.xi[k];
            out.xi[k] = p.e21[k] * in.eta[k] + p.e22[k] * in.xi[k];
        }
        return out;
    };
    auto add_scaled = [&](const Spec& a, double c, const Spec& b) {
        Spec out = a;
        for (int k = 0; k < nk; ++k) {
            out.eta[k] += c * b.eta[k];
            out.xi[k] += c * b.xi[k];
        }
        return out;
    };

    const Spec k1 = rhs_nonlinear(s);
    const Spec ehw = apply_prop(half_, s);
    const Spec k2 = rhs_nonlinear(apply_prop(half_, add_scaled(s, dt_ / 2.0, k1)));
    const Spec k3 = rhs_nonlinear(add_scaled(ehw, dt_ / 2.0, k2));
    const Spec efw = apply_prop(full_, s);
    const Spec k4 = rhs_nonlinear(add_scaled(efw, dt_, apply_prop(half_, k3)));

    const Spec efk1 = apply_prop(full_, k1);
    const Spec ehk23 = apply_prop(half_, add_scaled(k2, 1.0, k3));
    Spec out = efw;
    for (int k = 0; k < nk; ++k) {
        out.eta[k] += dt_ / 6.0 * (efk1.eta[k] + 2.0 * ehk23.eta[k] + k4.eta[k]);
        out.xi[k] += dt_ / 6.0 * (efk1.xi[k] + 2.0 * ehk23.xi[k] + k4.xi[k]);
    }
    out.eta[0] = 0.0;
    s = std::move(out);
}

void EulerStepper::step(SurfaceState& s) const {
    Spec sp = lift(s);
    step(sp);
    s = lower(sp);
}

SurfaceRhs rhs_full(const SpectralGrid& g, double grav, double gamma, int dno_order,
                    const RealField& eta, const RealField& xi) {
    EulerStepper st(g, grav, gamma, dno_order, 1.0);
    EulerStepper::Spec s = st.lift({eta, xi});
    RSpec gxi = DnoOperator(g, dno_order).apply(s.eta, s.xi);
    const Padded eta_pad = rspec_pad(g, s.eta);
    const RSpec etax = d_x(g, s.eta);
    const RSpec xix = d_x(g, s.xi);

    RSpec deta = gxi;
    {
        RSpec adv = rspec_product(g, eta_pad, etax);
        axpy(deta, gamma, adv);
        deta[0] = 0.0;
    }

    RSpec q = rspec_product(g, rspec_pad(g, etax), xix);
    for (size_t i = 0; i < q.size(); ++i) q[i] += gxi[i];
    RSpec q2 = rspec_product(g, q, q);
    RealField q2f = rfield(g, q2);
    const RealField etaxf = rfield(g, etax);
    for (int j = 0; j < g.n; ++j) q2f[j] /= 1.0 + etaxf[j] * etaxf[j];
    RSpec quot = rspec(g, q2f);
    rspec_truncate(g, quot);

    RSpec xix2 = rspec_product(g, xix, xix);
    RSpec dxi(quot.size());
    for (size_t i = 0; i < dxi.size(); ++i)
        dxi[i] = 0.5 * quot[i] - 0.5 * xix2[i] - grav * s.eta[i];
    RSpec etaxix = rspec_product(g, eta_pad, xix);
    axpy(dxi, gamma, etaxix);
    RSpec ginv = d_xinv(g, gxi);
    axpy(dxi, gamma, ginv);

    return {rfield(g, deta), rfield(g, dxi)};
}

double energy_full(const SpectralGrid& g, double grav, double gamma, int dno_order,
                   const RealField& eta, const RealField& xi) {
    RSpec ce = rspec(g, eta), cx = rspec(g, xi);
    rspec_truncate(g, ce);
    rspec_truncate(g, cx);
    const RSpec gxi = DnoOperator(g, dno_order).apply(ce, cx);
    const RSpec eta2 = rspec_product(g, ce, ce);
    const double t1 = rspec_inner(g, cx, gxi);
    const double t2 = rspec_inner(g, eta2, d_x(g, cx));
    const double t3 = rspec_inner(g, eta2, ce);
    const double t4 = rspec_inner(g, ce, ce);
    return 0.5 * (t1 - gamma * t2 + gamma * gamma / 3.0 * t3 + grav * t4);
}

double energy_canonical(const SpectralGrid& g, double grav, double gamma, int dno_order,
                        const RealField& eta, const RealField& zeta) {
    RSpec ce = rspec(g, eta), cz = rspec(g, zeta);
    rspec_truncate(g, ce);
    rspec_truncate(g, cz);
    RSpec w = cz;
    const RSpec ieta = d_xinv(g, ce);
    for (size_t i = 0; i < w.size(); ++i) w[i] += gamma / 2.0 * ieta[i];
    const RSpec gw = DnoOperator(g, dno_order).apply(ce, w);
    const RSpec eta2 = rspec_product(g, ce, ce);
    const double t1 = rspec_inner(g, w, gw);
    const double t2 = rspec_inner(g, eta2, d_x(g, cz));
    const double t3 = rspec_inner(g, eta2, ce);
    const double t4 = rspec_inner(g, ce, ce);
    return 0.5 * (t1 - gamma * t2 - gamma * gamma / 6.0 * t3 + grav * t4);
}

double momentum(const SpectralGrid& g, double gamma, const RealField& eta,
                const RealField& xi) {
    RSpec ce = rspec(g, eta), cx = rspec(g, xi);
    return rspec_inner(g, ce, d_x(g, cx)) - gamma / 2.0 * rspec_inner(g, ce, ce);
}

double volume(const SpectralGrid& g, const RealField& eta) { return integrate(g, eta); }

RealField xi_to_zeta(const SpectralGrid& g, double gamma, const RealField& eta,
                     const RealField& xi) {
    RealField corr = apply_symbol(g, Sym::DerivInv, eta);
    RealField out = xi;
    for (int j = 0; j < g.n; ++j) out[j] -= gamma / 2.0 * corr[j];
    return out;
}

RealField zeta_to_xi(const SpectralGrid& g, double gamma, const RealField& eta,
                     const RealField& zeta) {
    RealField corr = apply_symbol(g, Sym::DerivInv, eta);
    RealField out = zeta;
    for (int j = 0; j < g.n; ++j) out[j] += gamma / 2.0 * corr[j];
    return out;
}

ComplexField to_complex_z(const SpectralGrid& g, double grav, double gamma,
                          const RealField& eta, const RealField& zeta) {
    const ComplexField ce = to_spectrum(g, eta);
    const ComplexField cz = to_spectrum(g, zeta);
    ComplexField z(g.n, cd(0.0, 0.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < g.n; ++j) {
        const double k = g.k[j];
        if (k == 0.0) continue;
        const double a = a_k(k, grav, gamma);
        z[j] = inv_sqrt2 * (a * ce[j] + cd(0.0, 1.0) / a * cz[j]);
    }
    return from_spectrum(g, z);
}

CanonicalPair from_complex_z(const SpectralGrid& g, double grav, double gamma,
                             const ComplexField& z) {
    const ComplexField cz = to_spectrum(g, z);
    ComplexField ce(g.n, cd(0.0, 0.0)), czeta(g.n, cd(0.0, 0.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < g.n; ++j) {
        const double k = g.k[j];
        if (k == 0.0) continue;
        const int jm = (g.n - j) % g.n;  // index of -k
        const double a = a_k(k, grav, gamma);
        const cd zp = cz[j], zm = std::conj(cz[jm]);
        ce[j] = inv_sqrt2 * (zp + zm) / a;
        czeta[j] = inv_sqrt2 * a * (zp - zm) / cd(0.0, 1.0);
    }
    return {from_spectrum_real(g, ce), from_spectrum_real(g, czeta)};
}

}  // namespace vw
