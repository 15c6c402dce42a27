#pragma once
// Discretized projective Fourier transform (Weyl quantization), traces,
// Wigner recovery and distributions, twisted convolution and the Moyal star
// product.  All accuracy claims are for functions negligible at the domain
// boundary; the kernel is banded (rows with q-u off the grid are dropped).

#include "phasekit/grid.hpp"

namespace pk {

// [S_nu(x) xi](q) = e^{-i nu Theta(q;-x)} xi(q - x1); x1 must sit on the grid.
WaveFunction1D apply_projective_rep(double x1, double x2, const WaveFunction1D &xi,
                                    double nu);

// K(q,u) = sum_v dv e^{-i nu (q+u) v / 2} f(q-u, v), banded in q-u.
OperatorKernel weyl_quantize(const GridFunction2D &f, double nu);

// c(nu) dq sum_q K(q,q) with c(nu) = nu/(2 pi), calibrated so that
// trace(quantize(f)) = f(0).
std::complex<double> operator_trace(const OperatorKernel &K);

// f(x) = c(nu) dq sum_q e^{i nu (q + x1/2) x2} K(q + x1, q).
GridFunction2D wigner_recover(const OperatorKernel &K);

// (f (*) g)(z) = dx^2 sum_x e^{i nu Omega(x,z)} f(x) g(z-x), periodic.
GridFunction2D twisted_convolution(const GridFunction2D &f, const GridFunction2D &g,
                                   double nu);

// direction -1: F(z) = (2 pi hbar)^-1 h^2 sum_x e^{-i x.z/hbar} f(x), output
// on the conjugate grid; +1: the inverse, input on the conjugate grid.
GridFunction2D fourier2d(const GridFunction2D &f, double hbar, int direction);

// Transport between the original and conjugate grids used by the star
// product: inverse transform to the conjugate grid and forward back.
GridFunction2D inv_fourier_to_conj(const GridFunction2D &F, double hbar);
GridFunction2D fwd_fourier_from_conj(const GridFunction2D &f, double hbar);

// F o G = forward(inverse(F) (*)_{1/hbar} inverse(G)).
GridFunction2D moyal_star(const GridFunction2D &F, const GridFunction2D &G,
                          double hbar);

// Cross-ambiguity omega(x) = dq sum_q e^{i q x2/hbar} xi(q+x1/2) conj(chi(q-x1/2))
// with band-limited interpolation at the half shifts; the Wigner distribution
// is its forward transform.
GridFunction2D cross_ambiguity(const WaveFunction1D &xi, const WaveFunction1D &chi,
                               double hbar);
GridFunction2D wigner_distribution(const WaveFunction1D &xi, const WaveFunction1D &chi,
                                   double hbar);

struct PlancherelReport {
	double value = 0.0;
	bool relative = true; // false when the input is the zero function
};
PlancherelReport plancherel_residual(const GridFunction2D &f, double nu);

struct DecomposeReport {
	GridFunction2D tilde_f;    // forward transform of f, on the conjugate grid
	double adjoint_check = 0;  // max |quantize(f^*) - quantize(f)^dagger|
	double tilde_imag_max = 0; // imaginary content of tilde_f
};
DecomposeReport weyl_selfadjoint_decompose(const GridFunction2D &f, double hbar);

// ---- fixtures (closed forms; no data files) ----
GridFunction2D gauss2(const Grid2D &g, double s = 1.0, double c1 = 0.0, double c2 = 0.0);
WaveFunction1D hermite0(int n, double extent, double hbar);
WaveFunction1D hermite1(int n, double extent, double hbar);
// Gaussian-windowed random trigonometric polynomial, |modes| <= kk.
GridFunction2D band_limited_random(const Grid2D &g, int kk, unsigned seed,
                                   double window_s);

} // namespace pk
