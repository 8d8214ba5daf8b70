#pragma once
// Periodic pseudo-spectral toolbox on [0, 2*pi): grids, FFT-backed transforms,
// Fourier multipliers and 2/3-rule dealiased products.
//
// Conventions:
//   * n collocation points x_j = 2*pi*j/n, integer wavenumbers in FFT order.
//   * to_spectrum returns coefficients c_k with f(x) = sum_k c_k e^{ikx}.
//   * Negative-power multipliers (1/k, 1/|k|) zero the k = 0 mode; sgn(0) = 0.
//   * Products are evaluated on a 3n/2 grid and truncated to |k| <= n/3,
//     so pairwise products are alias-free for fields kept under that cutoff.

#include <complex>
#include <vector>

namespace vw {

using cd = std::complex<double>;
using RealField = std::vector<double>;
using ComplexField = std::vector<cd>;

struct SpectralGrid {
    int n = 0;                 // number of collocation points (power of two)
    int kmax = 0;              // dealiasing cutoff, floor(n/3)
    std::vector<double> x;     // collocation nodes
    std::vector<double> k;     // wavenumbers, FFT order: 0..n/2-1, -n/2..-1

    explicit SpectralGrid(int n_points);
};

// --- full-spectrum interface (complex coefficients, FFT order) --------------

ComplexField to_spectrum(const SpectralGrid& g, const RealField& f);
ComplexField to_spectrum(const SpectralGrid& g, const ComplexField& f);
RealField from_spectrum_real(const SpectralGrid& g, const ComplexField& c);
ComplexField from_spectrum(const SpectralGrid& g, const ComplexField& c);

enum class Sym {
    Hilbert,   // -i sgn(k)
    Deriv,     // ik
    DerivInv,  // 1/(ik), 0 at k = 0
    AbsD,      // |k|
    AbsDInv,   // 1/|k|, 0 at k = 0
};

// Multiplier values over the grid's wavenumbers (FFT order).
std::vector<cd> symbol(const SpectralGrid& g, Sym s);

RealField apply_symbol(const SpectralGrid& g, Sym s, const RealField& f);
ComplexField apply_symbol(const SpectralGrid& g, Sym s, const ComplexField& f);
ComplexField apply_multiplier(const SpectralGrid& g, const std::vector<cd>& m,
                              const ComplexField& f);

// Alias-free pointwise products (2/3 rule, pairwise).
RealField dealiased_product(const SpectralGrid& g, const RealField& a, const RealField& b);
ComplexField dealiased_product(const SpectralGrid& g, const ComplexField& a,
                               const ComplexField& b);

// Zero every coefficient with |k| > kmax (and the Nyquist mode).
void truncate_spectrum(const SpectralGrid& g, ComplexField& c);

// Trapezoidal quadrature over the periodic cell (= 2*pi * mean).
double integrate(const SpectralGrid& g, const RealField& f);

// --- half-spectrum interface for real fields (performance path) -------------
//
// Real fields are carried as c_k for k = 0..n/2 (length n/2+1); negative modes
// are implied by conjugate symmetry. This is what the solvers use internally.

using RSpec = std::vector<cd>;

RSpec rspec(const SpectralGrid& g, const RealField& f);
void rspec_truncate(const SpectralGrid& g, RSpec& c);
RealField rfield(const SpectralGrid& g, const RSpec& c);
RSpec rspec_apply(const SpectralGrid& g, Sym s, const RSpec& c);

// Dealiased product of two half-spectra, truncated to |k| <= kmax.
RSpec rspec_product(const SpectralGrid& g, const RSpec& a, const RSpec& b);

// Padded-grid physical factor, for products against a reused field.
struct Padded {
    std::vector<double> v;     // values on the 3n/2 collocation grid
};
Padded rspec_pad(const SpectralGrid& g, const RSpec& c);
RSpec rspec_product(const SpectralGrid& g, const Padded& a, const RSpec& b);
Padded pad_product(const SpectralGrid& g, const Padded& a, const Padded& b);

double rspec_integrate(const SpectralGrid& g, const RSpec& a);             // integral of the field
double rspec_inner(const SpectralGrid& g, const RSpec& a, const RSpec& b); // integral of a*b

RSpec to_rspec(const SpectralGrid& g, const ComplexField& full);
ComplexField to_full(const SpectralGrid& g, const RSpec& half);

}  // namespace vw
