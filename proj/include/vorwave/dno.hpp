#pragma once
// Dirichlet-Neumann operator for the deep-water periodic problem, as a Taylor
// series G(eta) = sum_j G^(j)(eta) truncated at a fixed order. The j = 0..2
// terms follow the explicit formulas; higher terms come from the recursion on
// the surface traces of the velocity potential:
//
//   phi^(0) = xi,
//   phi^(j) = - sum_{p=1..j} (eta^p / p!) |D|^p phi^(j-p),
//   G^(j)  =   sum_{p=0..j} (eta^p / p!) |D|^{p+1} phi^(j-p)
//            - (dx eta) sum_{p=0..j-1} (eta^p / p!) dx |D|^p phi^(j-1-p).
//
// Every product is dealiased with the 2/3 rule.

#include "vorwave/spectral.hpp"

namespace vw {

// Single homogeneous term G^(j)(eta) xi. j <= 2 uses the explicit formulas.
RealField dno_term(const SpectralGrid& g, int j, const RealField& eta, const RealField& xi);

// Same term built from the recursion for any j >= 1 (used to gate the
// recursion against the explicit formulas).
RealField dno_term_recursive(const SpectralGrid& g, int j, const RealField& eta,
                             const RealField& xi);

// Truncated operator sum_{j=0..order} G^(j)(eta) xi.
RealField dno_apply(const SpectralGrid& g, const RealField& eta, const RealField& xi,
                    int order);

// Reusable-workspace form used by the time stepper.
class DnoOperator {
  public:
    DnoOperator(const SpectralGrid& g, int order) : grid_(g), order_(order) {}

    // G(eta) xi on half-spectra.
    RSpec apply(const RSpec& eta, const RSpec& xi) const;
    int order() const { return order_; }

  private:
    const SpectralGrid& grid_;
    int order_;
};

}  // namespace vw
