#include "vorwave/dno.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vw {

namespace {

// |D|^p as a half-spectrum map
RSpec abs_d_pow(const SpectralGrid&, const RSpec& c, int p) {
    RSpec out(c.size());
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        double m = 1.0;
        for (int i = 0; i < p; ++i) m *= k;
        out[k] = m * c[k];
    }
    return out;
}

RSpec d_x(const SpectralGrid& g, const RSpec& c) { return rspec_apply(g, Sym::Deriv, c); }

struct Chain {
    // phi[j]: surface-trace corrections; eta_pow[p]: padded eta^p / p! factors;
    // etax_pow[p]: padded (dx eta) eta^p / p! factors.
    std::vector<RSpec> phi;
    std::vector<Padded> eta_pow;
    std::vector<Padded> etax_pow;
};

Chain build_chain(const SpectralGrid& g, const RSpec& eta, const RSpec& xi, int order) {
    Chain ch;
    ch.eta_pow.reserve(order + 1);
    ch.eta_pow.push_back(rspec_pad(g, eta));  // eta^1 / 1!
    for (int p = 2; p <= order; ++p) {
        Padded next = pad_product(g, ch.eta_pow.back(), ch.eta_pow.front());
        for (double& v : next.v) v /= p;  // accumulate 1/p!
        ch.eta_pow.push_back(std::move(next));
    }
    const Padded etax = rspec_pad(g, d_x(g, eta));
    ch.etax_pow.push_back(etax);  // p = 0
    for (int p = 1; p < order; ++p)
        ch.etax_pow.push_back(pad_product(g, etax, ch.eta_pow[p - 1]));

    ch.phi.reserve(order + 1);
    ch.phi.push_back(xi);
    for (int j = 1; j <= order; ++j) {
        RSpec acc(g.n / 2 + 1, cd(0.0, 0.0));
        for (int p = 1; p <= j; ++p) {
            RSpec term = rspec_product(g, ch.eta_pow[p - 1], abs_d_pow(g, ch.phi[j - p], p));
            for (size_t i = 0; i < acc.size(); ++i) acc[i] -= term[i];
        }
        ch.phi.push_back(std::move(acc));
    }
    return ch;
}

RSpec recursive_term(const SpectralGrid& g, const Chain& ch, int j) {
    RSpec out = abs_d_pow(g, ch.phi[j], 1);  // p = 0 piece of the first sum
    for (int p = 1; p <= j; ++p) {
        RSpec term = rspec_product(g, ch.eta_pow[p - 1], abs_d_pow(g, ch.phi[j - p], p + 1));
        for (size_t i = 0; i < out.size(); ++i) out[i] += term[i];
    }
    for (int p = 0; p <= j - 1; ++p) {
        RSpec term =
            rspec_product(g, ch.etax_pow[p], d_x(g, abs_d_pow(g, ch.phi[j - 1 - p], p)));
        for (size_t i = 0; i < out.size(); ++i) out[i] -= term[i];
    }
    return out;
}

RSpec explicit_g1(const SpectralGrid& g, const Padded& eta, const RSpec& xi) {
    // D eta D - |D| eta |D| with D = -i dx, written real-safe as
    // -dx(eta dx xi) - |D|(eta |D| xi) using D eta D = -dx eta dx.
    RSpec inner1 = rspec_product(g, eta, d_x(g, xi));
    inner1 = d_x(g, inner1);
    RSpec inner2 = rspec_product(g, eta, abs_d_pow(g, xi, 1));
    inner2 = abs_d_pow(g, inner2, 1);
    for (size_t i = 0; i < inner1.size(); ++i) inner1[i] = -inner1[i] - inner2[i];
    return inner1;
}

RSpec explicit_g2(const SpectralGrid& g, const Padded& eta, const Padded& eta2_half,
                  const RSpec& xi) {
    // -1/2 (|D|^2 eta^2 G0 + G0 eta^2 |D|^2 - 2 G0 eta G0 eta G0) xi,
    // eta2_half carries eta^2/2 (as cached by the chain).
    RSpec t1 = rspec_product(g, eta2_half, abs_d_pow(g, xi, 1));
    t1 = abs_d_pow(g, t1, 2);
    RSpec t2 = rspec_product(g, eta2_half, abs_d_pow(g, xi, 2));
    t2 = abs_d_pow(g, t2, 1);
    RSpec t3 = rspec_product(g, eta, abs_d_pow(g, xi, 1));
    t3 = rspec_product(g, eta, abs_d_pow(g, t3, 1));
    t3 = abs_d_pow(g, t3, 1);
    RSpec out(t1.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -(t1[i] + t2[i]) + t3[i];
    return out;
}

}  // namespace

RealField dno_term(const SpectralGrid& g, int j, const RealField& eta, const RealField& xi) {
    if (j < 0) throw std::invalid_argument("dno_term: negative order");
    RSpec ce = rspec(g, eta), cx = rspec(g, xi);
    rspec_truncate(g, ce);
    rspec_truncate(g, cx);
    if (j == 0) return rfield(g, abs_d_pow(g, cx, 1));
    Padded ep = rspec_pad(g, ce);
    if (j == 1) return rfield(g, explicit_g1(g, ep, cx));
    if (j == 2) {
        Padded e2 = pad_product(g, ep, ep);
        for (double& v : e2.v) v /= 2.0;
        return rfield(g, explicit_g2(g, ep, e2, cx));
    }
    Chain ch = build_chain(g, ce, cx, j);
    return rfield(g, recursive_term(g, ch, j));
}

RealField dno_term_recursive(const SpectralGrid& g, int j, const RealField& eta,
                             const RealField& xi) {
    if (j < 1) throw std::invalid_argument("dno_term_recursive: j must be >= 1");
    RSpec ce = rspec(g, eta), cx = rspec(g, xi);
    rspec_truncate(g, ce);
    rspec_truncate(g, cx);
    Chain ch = build_chain(g, ce, cx, j);
    return rfield(g, recursive_term(g, ch, j));
}

RSpec DnoOperator::apply(const RSpec& eta, const RSpec& xi) const {
    const SpectralGrid& g = grid_;
    RSpec out = abs_d_pow(g, xi, 1);  // G^(0)
    if (order_ == 0) return out;
    Chain ch = build_chain(g, eta, xi, order_);
    RSpec g1 = explicit_g1(g, ch.eta_pow[0], xi);
    for (size_t i = 0; i < out.size(); ++i) out[i] += g1[i];
    if (order_ >= 2) {
        RSpec g2 = explicit_g2(g, ch.eta_pow[0], ch.eta_pow[1], xi);
        for (size_t i = 0; i < out.size(); ++i) out[i] += g2[i];
    }
    for (int j = 3; j <= order_; ++j) {
        RSpec gj = recursive_term(g, ch, j);
        for (size_t i = 0; i < out.size(); ++i) out[i] += gj[i];
    }
    return out;
}

RealField dno_apply(const SpectralGrid& g, const RealField& eta, const RealField& xi,
                    int order) {
    RSpec ce = rspec(g, eta), cx = rspec(g, xi);
    rspec_truncate(g, ce);
    rspec_truncate(g, cx);
    return rfield(g, DnoOperator(g, order).apply(ce, cx));
}

}  // namespace vw
