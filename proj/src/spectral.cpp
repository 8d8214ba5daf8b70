#include "vorwave/spectral.hpp"

#include <fftw3.h>

#include <cassert>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace vw {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// FFTW planner is not thread-safe; plan creation is serialized. Executed plans
// own their buffers, so a cache entry must not be used concurrently -- the
// cache is thread_local to keep the fast path lock-free.
std::mutex planner_mutex;

struct C2CPlans {
    int n = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;  // e^{-ikx} analysis
    fftw_plan bwd = nullptr;  // e^{+ikx} synthesis

    explicit C2CPlans(int n_) : n(n_) {
        buf = fftw_alloc_complex(static_cast<size_t>(n));
        std::lock_guard<std::mutex> lock(planner_mutex);
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~C2CPlans() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    C2CPlans(const C2CPlans&) = delete;
    C2CPlans& operator=(const C2CPlans&) = delete;
};

struct R2CPlans {
    int n = 0;
    double* real_buf = nullptr;
    fftw_complex* spec_buf = nullptr;
    fftw_plan fwd = nullptr;  // r2c
    fftw_plan bwd = nullptr;  // c2r (destroys spec_buf, which we rewrite anyway)

    explicit R2CPlans(int n_) : n(n_) {
        real_buf = fftw_alloc_real(static_cast<size_t>(n));
        spec_buf = fftw_alloc_complex(static_cast<size_t>(n / 2 + 1));
        std::lock_guard<std::mutex> lock(planner_mutex);
        fwd = fftw_plan_dft_r2c_1d(n, real_buf, spec_buf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(n, spec_buf, real_buf, FFTW_ESTIMATE);
    }
    ~R2CPlans() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(spec_buf);
    }
    R2CPlans(const R2CPlans&) = delete;
    R2CPlans& operator=(const R2CPlans&) = delete;
};

C2CPlans& c2c_plans(int n) {
    thread_local std::map<int, std::unique_ptr<C2CPlans>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<C2CPlans>(n);
    return *slot;
}

R2CPlans& r2c_plans(int n) {
    thread_local std::map<int, std::unique_ptr<R2CPlans>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<R2CPlans>(n);
    return *slot;
}

int padded_size(int n) { return 3 * n / 2; }

}  // namespace

SpectralGrid::SpectralGrid(int n_points) : n(n_points) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("SpectralGrid: n must be a power of two >= 4");
    kmax = n / 3;
    x.resize(n);
    k.resize(n);
    for (int j = 0; j < n; ++j) {
        x[j] = two_pi * j / n;
        k[j] = (j < n / 2) ? j : j - n;
    }
}

ComplexField to_spectrum(const SpectralGrid& g, const ComplexField& f) {
    assert(static_cast<int>(f.size()) == g.n);
    auto& p = c2c_plans(g.n);
    std::memcpy(p.buf, f.data(), sizeof(cd) * f.size());
    fftw_execute(p.fwd);
    ComplexField c(g.n);
    const double scale = 1.0 / g.n;
    auto* out = reinterpret_cast<cd*>(p.buf);
    for (int j = 0; j < g.n; ++j) c[j] = out[j] * scale;
    return c;
}

ComplexField to_spectrum(const SpectralGrid& g, const RealField& f) {
    ComplexField tmp(f.begin(), f.end());
    return to_spectrum(g, tmp);
}

ComplexField from_spectrum(const SpectralGrid& g, const ComplexField& c) {
    assert(static_cast<int>(c.size()) == g.n);
    auto& p = c2c_plans(g.n);
    std::memcpy(p.buf, c.data(), sizeof(cd) * c.size());
    fftw_execute(p.bwd);
    ComplexField f(g.n);
    auto* out = reinterpret_cast<cd*>(p.buf);
    for (int j = 0; j < g.n; ++j) f[j] = out[j];
    return f;
}

RealField from_spectrum_real(const SpectralGrid& g, const ComplexField& c) {
    ComplexField f = from_spectrum(g, c);
    RealField r(g.n);
    for (int j = 0; j < g.n; ++j) r[j] = f[j].real();
    return r;
}

std::vector<cd> symbol(const SpectralGrid& g, Sym s) {
    std::vector<cd> m(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double k = g.k[j];
        switch (s) {
            case Sym::Hilbert:
                m[j] = cd(0.0, k > 0 ? -1.0 : (k < 0 ? 1.0 : 0.0));
                break;
            case Sym::Deriv:
                m[j] = cd(0.0, k);
                break;
            case Sym::DerivInv:
                m[j] = (k != 0.0) ? cd(0.0, -1.0 / k) : cd(0.0, 0.0);
                break;
            case Sym::AbsD:
                m[j] = cd(std::abs(k), 0.0);
                break;
            case Sym::AbsDInv:
                m[j] = (k != 0.0) ? cd(1.0 / std::abs(k), 0.0) : cd(0.0, 0.0);
                break;
        }
    }
    return m;
}

ComplexField apply_multiplier(const SpectralGrid& g, const std::vector<cd>& m,
                              const ComplexField& f) {
    ComplexField c = to_spectrum(g, f);
    for (int j = 0; j < g.n; ++j) c[j] *= m[j];
    return from_spectrum(g, c);
}

ComplexField apply_symbol(const SpectralGrid& g, Sym s, const ComplexField& f) {
    return apply_multiplier(g, symbol(g, s), f);
}

RealField apply_symbol(const SpectralGrid& g, Sym s, const RealField& f) {
    return rfield(g, rspec_apply(g, s, rspec(g, f)));
}

void truncate_spectrum(const SpectralGrid& g, ComplexField& c) {
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.k[j]) > g.kmax) c[j] = cd(0.0, 0.0);
}

ComplexField dealiased_product(const SpectralGrid& g, const ComplexField& a,
                               const ComplexField& b) {
    const int m = padded_size(g.n);
    auto& p = c2c_plans(m);
    auto pad = [&](const ComplexField& f, ComplexField& out) {
        ComplexField c = to_spectrum(g, f);
        out.assign(m, cd(0.0, 0.0));
        for (int j = 0; j < g.n; ++j) {
            const int k = static_cast<int>(g.k[j]);
            if (std::abs(k) > g.kmax) continue;
            out[(k + m) % m] = c[j];
        }
        return;
    };
    ComplexField ca, cb;
    pad(a, ca);
    pad(b, cb);
    auto* buf = reinterpret_cast<cd*>(p.buf);
    std::memcpy(buf, ca.data(), sizeof(cd) * ca.size());
    fftw_execute(p.bwd);
    ComplexField fa(buf, buf + m);
    std::memcpy(buf, cb.data(), sizeof(cd) * cb.size());
    fftw_execute(p.bwd);
    for (int j = 0; j < m; ++j) buf[j] *= fa[j];
    fftw_execute(p.fwd);
    // gather back onto the original grid, truncated
    ComplexField c(g.n, cd(0.0, 0.0));
    const double scale = 1.0 / m;
    for (int j = 0; j < g.n; ++j) {
        const int k = static_cast<int>(g.k[j]);
        if (std::abs(k) > g.kmax) continue;
        c[j] = buf[(k + m) % m] * scale;
    }
    return from_spectrum(g, c);
}

RealField dealiased_product(const SpectralGrid& g, const RealField& a, const RealField& b) {
    return rfield(g, rspec_product(g, rspec(g, a), rspec(g, b)));
}

void rspec_truncate(const SpectralGrid& g, RSpec& c) {
    for (int k = g.kmax + 1; k <= g.n / 2; ++k) c[k] = cd(0.0, 0.0);
}

double integrate(const SpectralGrid& g, const RealField& f) {
    double s = 0.0;
    for (double v : f) s += v;
    return two_pi * s / g.n;
}

// --- half-spectrum path ------------------------------------------------------

RSpec rspec(const SpectralGrid& g, const RealField& f) {
    assert(static_cast<int>(f.size()) == g.n);
    auto& p = r2c_plans(g.n);
    std::memcpy(p.real_buf, f.data(), sizeof(double) * f.size());
    fftw_execute(p.fwd);
    RSpec c(g.n / 2 + 1);
    const double scale = 1.0 / g.n;
    auto* out = reinterpret_cast<cd*>(p.spec_buf);
    for (int j = 0; j <= g.n / 2; ++j) c[j] = out[j] * scale;
    return c;
}

RealField rfield(const SpectralGrid& g, const RSpec& c) {
    assert(static_cast<int>(c.size()) == g.n / 2 + 1);
    auto& p = r2c_plans(g.n);
    std::memcpy(p.spec_buf, c.data(), sizeof(cd) * c.size());
    fftw_execute(p.bwd);
    RealField f(g.n);
    std::memcpy(f.data(), p.real_buf, sizeof(double) * f.size());
    return f;
}

RSpec rspec_apply(const SpectralGrid& g, Sym s, const RSpec& c) {
    RSpec out(c.size());
    for (int k = 0; k <= g.n / 2; ++k) {
        cd m;
        switch (s) {
            case Sym::Hilbert: m = cd(0.0, k > 0 ? -1.0 : 0.0); break;
            case Sym::Deriv: m = cd(0.0, k); break;
            case Sym::DerivInv: m = (k != 0) ? cd(0.0, -1.0 / k) : cd(0.0, 0.0); break;
            case Sym::AbsD: m = cd(k, 0.0); break;
            case Sym::AbsDInv: m = (k != 0) ? cd(1.0 / k, 0.0) : cd(0.0, 0.0); break;
        }
        out[k] = m * c[k];
    }
    return out;
}

Padded rspec_pad(const SpectralGrid& g, const RSpec& c) {
    const int m = padded_size(g.n);
    auto& p = r2c_plans(m);
    std::memset(p.spec_buf, 0, sizeof(cd) * (m / 2 + 1));
    auto* spec = reinterpret_cast<cd*>(p.spec_buf);
    const int top = std::min<int>(g.kmax, g.n / 2);
    for (int k = 0; k <= top; ++k) spec[k] = c[k];
    fftw_execute(p.bwd);
    Padded out;
    out.v.assign(p.real_buf, p.real_buf + m);
    return out;
}

RSpec rspec_product(const SpectralGrid& g, const Padded& a, const RSpec& b) {
    const int m = padded_size(g.n);
    auto& p = r2c_plans(m);
    std::memset(p.spec_buf, 0, sizeof(cd) * (m / 2 + 1));
    auto* spec = reinterpret_cast<cd*>(p.spec_buf);
    const int top = std::min<int>(g.kmax, g.n / 2);
    for (int k = 0; k <= top; ++k) spec[k] = b[k];
    fftw_execute(p.bwd);
    for (int j = 0; j < m; ++j) p.real_buf[j] *= a.v[j];
    fftw_execute(p.fwd);
    RSpec out(g.n / 2 + 1, cd(0.0, 0.0));
    const double scale = 1.0 / m;
    for (int k = 0; k <= top; ++k) out[k] = spec[k] * scale;
    return out;
}

RSpec rspec_product(const SpectralGrid& g, const RSpec& a, const RSpec& b) {
    return rspec_product(g, rspec_pad(g, a), b);
}

Padded pad_product(const SpectralGrid& g, const Padded& a, const Padded& b) {
    // Pointwise product of padded factors is only used to build powers of a
    // single low-mode field; re-truncate so the 2/3 rule stays pairwise.
    const int m = padded_size(g.n);
    auto& p = r2c_plans(m);
    for (int j = 0; j < m; ++j) p.real_buf[j] = a.v[j] * b.v[j];
    fftw_execute(p.fwd);
    auto* spec = reinterpret_cast<cd*>(p.spec_buf);
    const double scale = 1.0 / m;
    const int top = std::min<int>(g.kmax, g.n / 2);
    for (int k = 0; k <= m / 2; ++k)
        spec[k] = (k <= top) ? spec[k] * scale : cd(0.0, 0.0);
    fftw_execute(p.bwd);
    Padded out;
    out.v.assign(p.real_buf, p.real_buf + m);
    return out;
}

double rspec_integrate(const SpectralGrid&, const RSpec& a) {
    return two_pi * a[0].real();
}

double rspec_inner(const SpectralGrid& g, const RSpec& a, const RSpec& b) {
    // integral of a*b = 2*pi * sum_k a_k conj(b_k) for real fields
    double s = a[0].real() * b[0].real();
    for (int k = 1; k <= g.n / 2; ++k) {
        const double w = (k == g.n / 2) ? 1.0 : 2.0;
        s += w * (a[k] * std::conj(b[k])).real();
    }
    return two_pi * s;
}

RSpec to_rspec(const SpectralGrid& g, const ComplexField& full) {
    RSpec c(g.n / 2 + 1);
    for (int k = 0; k <= g.n / 2; ++k) c[k] = full[k];
    return c;
}

ComplexField to_full(const SpectralGrid& g, const RSpec& half) {
    ComplexField c(g.n, cd(0.0, 0.0));
    for (int k = 0; k <= g.n / 2; ++k) c[k] = half[k];
    for (int k = 1; k < g.n / 2; ++k) c[g.n - k] = std::conj(half[k]);
    return c;
}

}  // namespace vw
