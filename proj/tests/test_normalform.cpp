#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "vorwave/normalform.hpp"

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

double max_abs(const RealField& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::fabs(v));
    return m;
}

}  // namespace

TEST_CASE("auxiliary flow of a single cosine at zero vorticity") {
    SpectralGrid g(128);
    RealField eta(g.n), zeta(g.n, 0.0);
    for (int j = 0; j < g.n; ++j) eta[j] = std::cos(g.x[j]);

    const CanonicalRhs r = k3_rhs(g, 1.0, 0.0, eta, zeta);
    for (int j = 0; j < g.n; ++j) {
        CHECK(r.deta[j] == doctest::Approx(-0.5 * std::cos(2.0 * g.x[j])).epsilon(1e-12));
        CHECK(std::fabs(r.dzeta[j]) <= 1e-13);
    }
}

TEST_CASE("tendencies are homogeneous of degree two") {
    SpectralGrid g(128);
    const RealField eta = random_surface(g, 0.01, 8, 1);
    const RealField zeta = random_surface(g, 0.05, 8, 2);
    const double t = 3.0;
    RealField te(g.n), tz(g.n);
    for (int j = 0; j < g.n; ++j) {
        te[j] = t * eta[j];
        tz[j] = t * zeta[j];
    }
    const CanonicalRhs a = k3_rhs(g, 1.0, -1.5, te, tz);
    const CanonicalRhs b = k3_rhs(g, 1.0, -1.5, eta, zeta);
    const double scale = std::max(max_abs(a.deta), max_abs(a.dzeta));
    for (int j = 0; j < g.n; ++j) {
        CHECK(std::fabs(a.deta[j] - t * t * b.deta[j]) <= 1e-11 * scale);
        CHECK(std::fabs(a.dzeta[j] - t * t * b.dzeta[j]) <= 1e-11 * scale);
    }
}

TEST_CASE("tendencies keep eta mean-free") {
    SpectralGrid g(128);
    for (double gam : {-2.0, 0.0, 2.0}) {
        const CanonicalRhs r = k3_rhs(g, 1.0, gam, random_surface(g, 0.01, 8, 3),
                                      random_surface(g, 0.05, 8, 4));
        CHECK(std::fabs(integrate(g, r.deta)) <= 1e-12);
    }
}

TEST_CASE("physical and spectral functionals agree on a small grid") {
    SpectralGrid g(64);
    const RealField eta = random_surface(g, 0.01, 6, 5);
    const RealField zeta = random_surface(g, 0.05, 6, 6);
    for (double gam : {-2.0, -0.7, 0.0, 1.3}) {
        CAPTURE(gam);
        const double hp = h3_physical(g, 1.0, gam, eta, zeta);
        const double hs = h3_spectral(g, 1.0, gam, eta, zeta);
        CHECK(std::fabs(hp - hs) <= 1e-9 * std::max(std::fabs(hp), 1e-12));
        const double kp = k3_physical(g, 1.0, gam, eta, zeta);
        const double ks = k3_spectral(g, 1.0, gam, eta, zeta);
        CHECK(std::fabs(kp - ks) <= 1e-9 * std::max(std::fabs(kp), 1e-12));
    }
}

TEST_CASE("quadratic energy equals its diagonal form") {
    SpectralGrid g(128);
    const RealField eta = random_surface(g, 0.01, 10, 7);
    const RealField zeta = random_surface(g, 0.05, 10, 8);
    for (double gam : {-2.0, 0.0, 1.5}) {
        const double hq = h2_quadratic(g, 1.0, gam, eta, zeta);
        const double hd = h2_diagonal(g, 1.0, gam, eta, zeta);
        CHECK(std::fabs(hq - hd) <= 1e-10 * std::fabs(hq));
    }
}

TEST_CASE("cohomological relation: dH2/ds along the flow equals H3") {
    SpectralGrid g(64);
    for (double gam : {-2.0, 0.0, 1.5}) {
        CAPTURE(gam);
        const RealField eta = random_surface(g, 0.005, 6, 9);
        const RealField zeta = random_surface(g, 0.02, 6, 10);
        const double ds = 1e-4;
        const CanonicalState fwd =
            k3_flow(g, 1.0, gam, {eta, zeta}, 0.0, ds, ds / 4.0);
        const CanonicalState bwd =
            k3_flow(g, 1.0, gam, {eta, zeta}, 0.0, -ds, ds / 4.0);
        const double d = (h2_quadratic(g, 1.0, gam, fwd.eta, fwd.zeta) -
                          h2_quadratic(g, 1.0, gam, bwd.eta, bwd.zeta)) /
                         (2.0 * ds);
        const double h3 = h3_physical(g, 1.0, gam, eta, zeta);
        CHECK(d == doctest::Approx(h3).epsilon(1e-6));
    }
}

TEST_CASE("K3 is conserved along its own flow") {
    SpectralGrid g(64);
    const RealField eta = random_surface(g, 0.005, 6, 11);
    const RealField zeta = random_surface(g, 0.02, 6, 12);
    for (double gam : {-2.0, 0.0, 1.5}) {
        const double k0 = k3_physical(g, 1.0, gam, eta, zeta);
        const CanonicalState s =
            k3_flow(g, 1.0, gam, {eta, zeta}, 0.0, -1.0, 0.02);
        const double k1 = k3_physical(g, 1.0, gam, s.eta, s.zeta);
        CHECK(std::fabs(k1 - k0) <= 1e-8 * std::max(std::fabs(k0), 1e-12));
    }
}

TEST_CASE("reconstruction of a uniform envelope") {
    SpectralGrid g(256);
    const double k0 = 10.0, B0 = 0.002;
    ComplexField u(g.n, cd(B0, 0.0));

    for (double gam : {-2.0, 0.0, 2.0}) {
        CAPTURE(gam);
        const CanonicalState seed = partial_reconstruct(g, 1.0, gam, k0, u);
        // first harmonic only: spectrum of eta lives at k = +-k0
        const ComplexField ce = to_spectrum(g, seed.eta);
        for (int j = 0; j < g.n; ++j)
            if (std::fabs(g.k[j]) != k0) CHECK(std::abs(ce[j]) <= 1e-14);

        const CanonicalState full = envelope_to_surface(g, 1.0, gam, k0, u, 0.02);
        // the flow adds corrections at the double harmonic of size O(B0^2)
        const ComplexField cf = to_spectrum(g, full.eta);
        double second = 0.0, first_shift = 0.0;
        for (int j = 0; j < g.n; ++j) {
            if (std::fabs(g.k[j]) == 2.0 * k0) second = std::max(second, std::abs(cf[j]));
            if (std::fabs(g.k[j]) == k0)
                first_shift = std::max(first_shift, std::abs(cf[j] - ce[j]));
        }
        CHECK(second > 1e-8);           // a genuine second harmonic appears
        CHECK(second < 100.0 * B0 * B0);  // ... of quadratic size
        CHECK(first_shift <= 10.0 * B0 * B0);

        // the inverse transformation recovers the envelope
        const ComplexField back = surface_to_envelope(g, 1.0, gam, k0, full, 0.02);
        for (int j = 0; j < g.n; ++j)
            CHECK(std::abs(back[j] - u[j]) <= 1e-10 * B0);
    }
}

TEST_CASE("flow round trip is the identity") {
    SpectralGrid g(64);
    const RealField eta = random_surface(g, 0.005, 6, 13);
    const RealField zeta = random_surface(g, 0.02, 6, 14);
    const CanonicalState fwd = k3_flow(g, 1.0, -1.0, {eta, zeta}, 0.0, -1.0, 0.01);
    const CanonicalState back = k3_flow(g, 1.0, -1.0, fwd, -1.0, 0.0, 0.01);
    for (int j = 0; j < g.n; ++j) {
        CHECK(std::fabs(back.eta[j] - eta[j]) <= 1e-10);
        CHECK(std::fabs(back.zeta[j] - zeta[j]) <= 1e-10);
    }
}
