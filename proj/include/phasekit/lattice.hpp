#pragma once
// Exact integer-lattice realizations: the operator algebra as amplitude maps
// amp * e^{i nu alpha q} L(x) with x in Z^2 and alpha in Z (all structure
// phases stay in this form), the Haar-axiom residuals on both algebras, and
// the kernel Yang-Baxter check on Z_n^2.

#include <array>
#include <complex>
#include <map>

namespace pk {

using LatticePoint = std::array<int, 2>;
// function on the lattice (dual-side element / operator coefficient)
using LatticeFunction = std::map<LatticePoint, std::complex<double>>;
// operator-side element: key (x1, x2, alpha), value amplitude
using LatticeElement = std::map<std::array<int, 3>, std::complex<double>>;
// tensor degree two: key (x1, x2, y1, y2, alpha)
using LatticeElement2 = std::map<std::array<int, 5>, std::complex<double>>;

// embed a coefficient function as sum f(x) L(x)
LatticeElement lattice_embed(const LatticeFunction &f);
LatticeElement lattice_unit();

// (A e^{i nu alpha q} L(x))(B e^{i nu beta q} L(y)): the right factor's q
// feels the left generator (q -> q - x1); each product adds Omega(x,y).
LatticeElement lattice_mult(const LatticeElement &a, const LatticeElement &b, double nu);
// degree-two product; the global phase feels the FIRST leg generator only.
LatticeElement2 lattice_mult2(const LatticeElement2 &a, const LatticeElement2 &b,
                              double nu);
// Delta(e^{i nu alpha q} L(x)) = e^{i nu alpha q} e^{i nu Theta(q;-x)} L(x) (x) L(x)
LatticeElement2 lattice_coproduct(const LatticeElement &f, double nu);
LatticeElement lattice_dagger(const LatticeElement &f);
// kappa: L(x) -> e^{i nu [Theta(q;x) - Theta(q;-x)]} L(-x)  (alpha -= 2 x2)
LatticeElement lattice_kappa(const LatticeElement &f);
// (id (x) phi): keep the terms whose second leg is the identity
LatticeElement lattice_phi_leg2(const LatticeElement2 &f2);
LatticeElement2 lattice_tens(const LatticeElement &a, const LatticeElement &b);

double lattice_residual(const LatticeElement &a, const LatticeElement &b);
double lattice_residual2(const LatticeElement2 &a, const LatticeElement2 &b);

struct HaarResiduals {
	double op_hwlia = 0;       // (id (x) phi) Delta f = phi(f) 1
	double op_hwsa = 0;        // strong right-invariance, operator algebra
	double dual_hwsa_plain = 0;  // dual-side invariance, displayed computation
	double dual_hwsa_phased = 0; // same through the phased route at sampled q
};
// f, g: coefficient functions on Z^2; q_sample: base point for the phased
// dual route (the residuals are q-independent; a sample detects drift).
HaarResiduals haar_axiom_residuals(const LatticeFunction &f, const LatticeFunction &g,
                                   double nu, double q_sample = 0.37);

// seeded random coefficient function supported on [-r, r]^2
LatticeFunction lattice_random(int r, unsigned seed);

// Max residual of R12 R13 R23 = R23 R13 R12 for the sign-valued kernel
// R(x,y;z,w) = e^{i[Omega(x,y)-Omega(z,w)]} delta_{x+y,z+w} on Z_n^2 embedded
// with spacing sqrt(2 pi) (every entry an exact sign).  Exhaustive over basis
// tensors for n <= 4, seeded random probes above; n <= 16.
double yang_baxter_residual(int lattice_n);

} // namespace pk
