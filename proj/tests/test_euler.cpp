#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "vorwave/euler.hpp"

using namespace vw;

namespace {

RealField random_surface(const SpectralGrid& g, double amp, int max_mode, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealField f(g.n, 0.0);
    for (int m = 1; m <= max_mode; ++m) {
        const double ac = amp * dist(rng), as = amp * dist(rng);
        for (int j = 0; j < g.n; ++j)
            f[j] += ac * std::cos(m * g.x[j]) + as * std::sin(m * g.x[j]);
    }
    return f;
}

double max_abs_diff(const RealField& a, const RealField& b) {
    double m = 0.0;
    for (size_t j = 0; j < a.size(); ++j) m = std::max(m, std::fabs(a[j] - b[j]));
    return m;
}

double state_error(const SurfaceState& a, const SurfaceState& b) {
    return std::max(max_abs_diff(a.eta, b.eta), max_abs_diff(a.xi, b.xi));
}

}  // namespace

TEST_CASE("energy of a flat-surface cosine stream") {
    SpectralGrid g(128);
    RealField eta(g.n, 0.0), xi(g.n);
    for (int j = 0; j < g.n; ++j) xi[j] = std::cos(g.x[j]);
    CHECK(energy_full(g, 1.0, 0.0, 6, eta, xi) == doctest::Approx(M_PI / 2.0).epsilon(1e-13));
}

TEST_CASE("momentum of a cosine-sine pair") {
    SpectralGrid g(128);
    const double a = 0.013, b = 0.78;
    RealField eta(g.n), xi(g.n);
    for (int j = 0; j < g.n; ++j) {
        eta[j] = a * std::cos(g.x[j]);
        xi[j] = b * std::sin(g.x[j]);
    }
    CHECK(momentum(g, 0.0, eta, xi) == doctest::Approx(M_PI * a * b).epsilon(1e-13));
    // vorticity correction is -gamma/2 int eta^2 = -gamma pi a^2 / 2
    const double gam = -1.7;
    CHECK(momentum(g, gam, eta, xi) ==
          doctest::Approx(M_PI * a * b - gam * M_PI * a * a / 2.0).epsilon(1e-13));
    CHECK(volume(g, eta) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("canonical and non-canonical energies agree") {
    SpectralGrid g(256);
    const RealField eta = random_surface(g, 0.01, 10, 61);
    const RealField xi = random_surface(g, 0.1, 10, 62);
    for (double gam : {-2.0, 0.0, 1.5}) {
        const RealField zeta = xi_to_zeta(g, gam, eta, xi);
        const double hf = energy_full(g, 1.0, gam, 6, eta, xi);
        const double hc = energy_canonical(g, 1.0, gam, 6, eta, zeta);
        CHECK(std::fabs(hf - hc) <= 1e-10 * std::max(std::fabs(hf), 1.0));
    }
}

TEST_CASE("xi <-> zeta round trip") {
    SpectralGrid g(128);
    const RealField eta = random_surface(g, 0.02, 8, 71);
    const RealField xi = random_surface(g, 0.5, 8, 72);
    const RealField zeta = xi_to_zeta(g, -1.3, eta, xi);
    const RealField back = zeta_to_xi(g, -1.3, eta, zeta);
    CHECK(max_abs_diff(xi, back) <= 1e-13);
}

TEST_CASE("complex diagonalizing variable round trip") {
    SpectralGrid g(128);
    const RealField eta = random_surface(g, 0.02, 8, 81);   // zero mean
    const RealField zeta = random_surface(g, 0.5, 8, 82);
    for (double gam : {-2.0, 0.0, 2.0}) {
        const ComplexField z = to_complex_z(g, 1.0, gam, eta, zeta);
        const CanonicalPair back = from_complex_z(g, 1.0, gam, z);
        CHECK(max_abs_diff(eta, back.eta) <= 1e-12);
        CHECK(max_abs_diff(zeta, back.zeta) <= 1e-12);
    }
}

TEST_CASE("linear dispersion is reproduced mode by mode") {
    SpectralGrid g(64);
    const double T = 0.5, amp = 1e-8;
    for (double gam : {-2.0, 0.0, 2.0})
        for (int k = 1; k <= 8; ++k) {
            CAPTURE(gam);
            CAPTURE(k);
            // seed a pure +k eigenmode through the diagonalizing variable
            ComplexField cz(g.n, cd(0.0, 0.0));
            cz[k] = cd(amp, 0.0);
            const CanonicalPair p = from_complex_z(g, 1.0, gam, from_spectrum(g, cz));
            SurfaceState s{p.eta, zeta_to_xi(g, gam, p.eta, p.zeta)};

            EulerStepper st(g, 1.0, gam, 4, 0.01);
            for (int i = 0; i < 50; ++i) st.step(s);

            const ComplexField zt =
                to_spectrum(g, to_complex_z(g, 1.0, gam, s.eta,
                                            xi_to_zeta(g, gam, s.eta, s.xi)));
            const double freq = -std::arg(zt[k] / cd(amp, 0.0)) / T;
            CHECK(freq == doctest::Approx(Omega_k(k, 1.0, gam)).epsilon(1e-6));
        }
}

TEST_CASE("energy conservation in the linear regime") {
    SpectralGrid g(128);
    RealField eta(g.n), xi(g.n);
    const double a = 1e-6;
    for (int j = 0; j < g.n; ++j) {
        eta[j] = a * std::cos(3.0 * g.x[j]);
        xi[j] = a * std::sin(3.0 * g.x[j]) / std::sqrt(3.0);
    }
    SurfaceState s{eta, xi};
    EulerStepper st(g, 1.0, -1.0, 4, 0.005);
    const double h0 = energy_full(g, 1.0, -1.0, 4, s.eta, s.xi);
    for (int i = 0; i < 10000; ++i) st.step(s);
    const double h1 = energy_full(g, 1.0, -1.0, 4, s.eta, s.xi);
    CHECK(std::fabs(h1 - h0) <= 1e-12 * std::fabs(h0));
}

TEST_CASE("fourth-order convergence of the time stepper") {
    SpectralGrid g(128);
    SurfaceState s0{random_surface(g, 0.01, 6, 91), random_surface(g, 0.01, 6, 92)};
    const double T = 1.0, gam = -1.0;

    auto advance = [&](double dt) {
        SurfaceState s = s0;
        EulerStepper st(g, 1.0, gam, 4, dt);
        const int steps = static_cast<int>(std::lround(T / dt));
        for (int i = 0; i < steps; ++i) st.step(s);
        return s;
    };
    const SurfaceState ref = advance(T / 2048.0);
    const double e1 = state_error(advance(T / 64.0), ref);
    const double e2 = state_error(advance(T / 128.0), ref);
    const double ratio = e1 / e2;
    CAPTURE(e1);
    CAPTURE(e2);
    CHECK(ratio >= 10.0);
    CHECK(ratio <= 24.0);
}

TEST_CASE("momentum drift over a long nonlinear run") {
    SpectralGrid g(128);
    RealField eta(g.n), xi(g.n);
    for (int j = 0; j < g.n; ++j) {
        eta[j] = 5e-3 * std::cos(2.0 * g.x[j]);
        xi[j] = 5e-3 * std::sin(2.0 * g.x[j]);
    }
    SurfaceState s{eta, xi};
    const double gam = -1.0;
    EulerStepper st(g, 1.0, gam, 6, 0.01);
    const double i0 = momentum(g, gam, s.eta, s.xi);
    const double h0 = energy_full(g, 1.0, gam, 6, s.eta, s.xi);
    for (int i = 0; i < 10000; ++i) st.step(s);  // t = 100
    const double i1 = momentum(g, gam, s.eta, s.xi);
    const double h1 = energy_full(g, 1.0, gam, 6, s.eta, s.xi);
    const double scale = std::max(std::fabs(i0), std::fabs(h0));
    CHECK(std::fabs(i1 - i0) <= 1e-8 * scale);
    CHECK(std::fabs(h1 - h0) <= 1e-8 * scale);
}

TEST_CASE("spectral hot path agrees with the physical-space step") {
    SpectralGrid g(128);
    SurfaceState s{random_surface(g, 0.01, 8, 95), random_surface(g, 0.05, 8, 96)};
    EulerStepper st(g, 1.0, 0.7, 6, 0.005);

    SurfaceState sp = s;
    EulerStepper::Spec spec = st.lift(s);
    for (int i = 0; i < 200; ++i) {
        st.step(sp);
        st.step(spec);
    }
    const SurfaceState lowered = st.lower(spec);
    CHECK(state_error(sp, lowered) <= 1e-12);
}
