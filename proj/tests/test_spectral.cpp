#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "vorwave/spectral.hpp"

using namespace vw;

namespace {

RealField random_low_mode(const SpectralGrid& g, int kmax, unsigned seed, double amp = 1.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealField f(g.n, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        const double a = amp * dist(rng), b = amp * dist(rng);
        for (int j = 0; j < g.n; ++j) f[j] += a * std::cos(k * g.x[j]) + b * std::sin(k * g.x[j]);
    }
    return f;
}

double max_abs_diff(const RealField& a, const RealField& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("transform round trip") {
    SpectralGrid g(64);
    const RealField f = random_low_mode(g, 20, 1);
    const RealField back = from_spectrum_real(g, to_spectrum(g, f));
    double scale = 0.0;
    for (double v : f) scale = std::max(scale, std::fabs(v));
    CHECK(max_abs_diff(f, back) <= 1e-12 * scale);
}

TEST_CASE("grid layout") {
    SpectralGrid g(32);
    CHECK(g.n == 32);
    CHECK(g.kmax == 10);
    CHECK(g.x[0] == 0.0);
    CHECK(g.x[1] == doctest::Approx(2.0 * M_PI / 32).epsilon(1e-15));
    CHECK(g.k[1] == 1.0);
    CHECK(g.k[31] == -1.0);
}

TEST_CASE("named symbols on single modes") {
    SpectralGrid g(64);
    RealField cosx(g.n), sinx(g.n), cos2x(g.n);
    for (int j = 0; j < g.n; ++j) {
        cosx[j] = std::cos(g.x[j]);
        sinx[j] = std::sin(g.x[j]);
        cos2x[j] = std::cos(2.0 * g.x[j]);
    }

    SUBCASE("Hilbert: cos x -> sin x") {
        CHECK(max_abs_diff(apply_symbol(g, Sym::Hilbert, cosx), sinx) <= 1e-13);
    }
    SUBCASE("dxinv: sin x -> -cos x") {
        RealField mcos = cosx;
        for (double& v : mcos) v = -v;
        CHECK(max_abs_diff(apply_symbol(g, Sym::DerivInv, sinx), mcos) <= 1e-13);
    }
    SUBCASE("|D|: cos 2x -> 2 cos 2x") {
        RealField two = cos2x;
        for (double& v : two) v *= 2.0;
        CHECK(max_abs_diff(apply_symbol(g, Sym::AbsD, cos2x), two) <= 1e-13);
    }
    SUBCASE("negative-power symbols zero the mean") {
        RealField one(g.n, 1.0);
        CHECK(max_abs_diff(apply_symbol(g, Sym::DerivInv, one), RealField(g.n, 0.0)) <= 1e-14);
        CHECK(max_abs_diff(apply_symbol(g, Sym::AbsDInv, one), RealField(g.n, 0.0)) <= 1e-14);
    }
}

TEST_CASE("operator identities on zero-mean fields") {
    SpectralGrid g(128);
    const RealField f = random_low_mode(g, 40, 2);

    SUBCASE("H o H = -Id") {
        const RealField hh = apply_symbol(g, Sym::Hilbert, apply_symbol(g, Sym::Hilbert, f));
        RealField mf = f;
        for (double& v : mf) v = -v;
        CHECK(max_abs_diff(hh, mf) <= 1e-12);
    }
    SUBCASE("dx o dxinv = Id") {
        const RealField id = apply_symbol(g, Sym::Deriv, apply_symbol(g, Sym::DerivInv, f));
        CHECK(max_abs_diff(id, f) <= 1e-12);
    }
    SUBCASE("|D| dxinv = H") {
        const RealField lhs = apply_symbol(g, Sym::AbsD, apply_symbol(g, Sym::DerivInv, f));
        const RealField rhs = apply_symbol(g, Sym::Hilbert, f);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("apply_symbol is linear") {
    SpectralGrid g(64);
    const RealField f = random_low_mode(g, 20, 3), h = random_low_mode(g, 20, 4);
    const double al = 1.7, be = -0.3;
    RealField combo(g.n);
    for (int j = 0; j < g.n; ++j) combo[j] = al * f[j] + be * h[j];
    const RealField lhs = apply_symbol(g, Sym::AbsD, combo);
    const RealField df = apply_symbol(g, Sym::AbsD, f), dh = apply_symbol(g, Sym::AbsD, h);
    RealField rhs(g.n);
    for (int j = 0; j < g.n; ++j) rhs[j] = al * df[j] + be * dh[j];
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("Parseval: trapezoid integral equals spectral inner product") {
    SpectralGrid g(64);
    const RealField f = random_low_mode(g, 20, 5), h = random_low_mode(g, 20, 6);
    RealField fh(g.n);
    for (int j = 0; j < g.n; ++j) fh[j] = f[j] * h[j];
    const double phys = integrate(g, fh);
    const ComplexField cf = to_spectrum(g, f), ch = to_spectrum(g, h);
    double spec = 0.0;
    for (int j = 0; j < g.n; ++j) spec += (cf[j] * std::conj(ch[j])).real();
    spec *= 2.0 * M_PI;
    CHECK(std::fabs(phys - spec) <= 1e-12 * std::fabs(phys));
}

TEST_CASE("dealiased product identities") {
    SpectralGrid g(64);
    RealField cosx(g.n), expect(g.n), zero(g.n, 0.0);
    for (int j = 0; j < g.n; ++j) {
        cosx[j] = std::cos(g.x[j]);
        expect[j] = 0.5 + 0.5 * std::cos(2.0 * g.x[j]);
    }
    CHECK(max_abs_diff(dealiased_product(g, cosx, cosx), expect) <= 1e-13);
    CHECK(max_abs_diff(dealiased_product(g, cosx, zero), zero) <= 1e-15);
}

TEST_CASE("near-cutoff product leaves no spurious low-mode energy") {
    // product of two modes just under the dealiasing cutoff, compared against
    // the exact product computed on a grid twice as fine
    SpectralGrid g(64);       // kmax = 21
    SpectralGrid fine(128);   // holds the exact product: modes up to 42
    const int ka = 20, kb = 21;
    RealField a(g.n), b(g.n), af(fine.n), bf(fine.n);
    for (int j = 0; j < g.n; ++j) {
        a[j] = std::cos(ka * g.x[j]);
        b[j] = std::cos(kb * g.x[j]);
    }
    for (int j = 0; j < fine.n; ++j) {
        af[j] = std::cos(ka * fine.x[j]);
        bf[j] = std::cos(kb * fine.x[j]);
    }
    const ComplexField coarse = to_spectrum(g, dealiased_product(g, a, b));
    RealField exact(fine.n);
    for (int j = 0; j < fine.n; ++j) exact[j] = af[j] * bf[j];
    const ComplexField ref = to_spectrum(fine, exact);
    // every retained coarse mode must match the exact result (in particular
    // the |k| = 1 difference mode); no energy may alias onto other low modes
    for (int j = 0; j < g.n; ++j) {
        const int k = static_cast<int>(g.k[j]);
        if (std::abs(k) > g.kmax) continue;
        const cd want = ref[(k + fine.n) % fine.n];
        CHECK(std::abs(coarse[j] - want) <= 1e-13);
    }
}

TEST_CASE("half-spectrum path agrees with the full-spectrum path") {
    SpectralGrid g(64);
    const RealField f = random_low_mode(g, 20, 7), h = random_low_mode(g, 20, 8);
    const RealField full = dealiased_product(g, f, h);
    const RealField half = rfield(g, rspec_product(g, rspec(g, f), rspec(g, h)));
    CHECK(max_abs_diff(full, half) <= 1e-12);
    const RealField sym_full = apply_symbol(g, Sym::Hilbert, f);
    const RealField sym_half = rfield(g, rspec_apply(g, Sym::Hilbert, rspec(g, f)));
    CHECK(max_abs_diff(sym_full, sym_half) <= 1e-13);
    CHECK(std::fabs(integrate(g, f) - rspec_integrate(g, rspec(g, f))) <= 1e-12);
}
