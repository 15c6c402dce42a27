#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/numerics.hpp"

#include <cmath>
#include <complex>

using namespace pk;
using cd = std::complex<double>;

namespace {

const int n = 64;
const double L = 16.0;
const Grid2D g0{n, L};

double rel_l2(const GridFunction2D &a, const GridFunction2D &b) {
	GridFunction2D d{a.grid, a.values - b.values};
	return d.l2() / b.l2();
}

double omega_c(double x1, double x2, double y1, double y2) {
	return 0.5 * (x1 * y2 - y1 * x2);
}

} // namespace

TEST_CASE("projective representation composes up to the cocycle phase") {
	const double nu = 1.0, hbar = 1.0;
	const double h = L / n;
	WaveFunction1D xi = hermite0(n, L, hbar);
	{
		WaveFunction1D x1 = hermite1(n, L, hbar);
		xi.values += 0.3 * x1.values;
	}
	// second components on the (2 pi / (nu L)) lattice: exact periodic phases
	const double u = 2.0 * M_PI / (nu * L);
	const double x2a = 2 * u, x2b = -3 * u;
	const int ka = 3, kb = -5;
	WaveFunction1D lhs =
	    apply_projective_rep(ka * h, x2a, apply_projective_rep(kb * h, x2b, xi, nu), nu);
	WaveFunction1D rhs = apply_projective_rep((ka + kb) * h, x2a + x2b, xi, nu);
	const cd ph = std::exp(cd(0, nu * omega_c(ka * h, x2a, kb * h, x2b)));
	double resid = 0;
	for (int j = 0; j < n; ++j)
		resid = std::max(resid, std::abs(lhs.values[j] - ph * rhs.values[j]));
	CHECK(resid <= 1e-12);
	CHECK(std::abs(lhs.l2() - xi.l2()) <= 1e-12); // unitarity
	CHECK_THROWS_AS(apply_projective_rep(0.3 * h, 0.0, xi, nu), std::invalid_argument);
}

TEST_CASE("fourier2d: gaussian self-duality and round trip") {
	const double hbar = 1.0;
	GridFunction2D F = gauss2(g0);
	GridFunction2D Fz = fourier2d(F, hbar, -1);
	Grid2D zg = g0.conjugate(hbar);
	GridFunction2D exact = gauss2(zg);
	CHECK(rel_l2(Fz, exact) <= 1e-8);
	GridFunction2D back = fourier2d(Fz, hbar, +1);
	CHECK(back.grid == g0);
	CHECK(rel_l2(back, F) <= 1e-10);
	CHECK_THROWS_AS(fourier2d(F, hbar, 0), std::invalid_argument);
}

TEST_CASE("quantize: hermiticity, trace calibration, round trip") {
	const double nu = 1.0;
	GridFunction2D F = gauss2(g0);
	OperatorKernel K = weyl_quantize(F, nu);
	// real even symbol -> self-adjoint kernel
	CHECK((K.values - K.values.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
	CHECK(std::abs(operator_trace(K) - cd(1.0)) <= 1e-8); // f(0) = 1
	OperatorKernel K2 = weyl_quantize(F, 2.0);
	CHECK(std::abs(operator_trace(K2) - cd(1.0)) <= 1e-8);
	GridFunction2D back = wigner_recover(K);
	CHECK(rel_l2(back, F) <= 1e-8);
}

TEST_CASE("a unit point mass quantizes to the identity kernel") {
	const double nu = 1.0;
	const double h = g0.spacing();
	GridFunction2D delta = GridFunction2D::zero(g0);
	delta.values(n / 2, n / 2) = 1.0 / (h * h); // lattice delta at the origin
	OperatorKernel K = weyl_quantize(delta, nu);
	Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n) / h;
	CHECK((K.values - id).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("quantization is a twisted-convolution homomorphism") {
	const double nu = 1.0;
	const double h = g0.spacing();
	GridFunction2D F = gauss2(g0);
	GridFunction2D G = gauss2(g0, 0.8, 0.7, -0.4);
	GridFunction2D FG = twisted_convolution(F, G, nu);
	OperatorKernel Kf = weyl_quantize(F, nu), Kg = weyl_quantize(G, nu);
	OperatorKernel Kfg = weyl_quantize(FG, nu);
	Eigen::MatrixXcd prod = h * (Kf.values * Kg.values);
	CHECK((Kfg.values - prod).norm() / prod.norm() <= 1e-6);
	// genuinely noncommutative
	GridFunction2D GF = twisted_convolution(G, F, nu);
	GridFunction2D d{g0, FG.values - GF.values};
	CHECK(d.l2() > 1e-2);
	CHECK(rel_l2(wigner_recover(Kfg), FG) <= 1e-6);
	GridFunction2D bad = GridFunction2D::zero({32, L});
	CHECK_THROWS_AS(twisted_convolution(F, bad, nu), std::invalid_argument);
}

TEST_CASE("plancherel identity, exact fixtures and random band-limited symbols") {
	const double nu = 1.0;
	PlancherelReport pg = plancherel_residual(gauss2(g0), nu);
	CHECK(pg.relative);
	CHECK(pg.value <= 1e-8);
	GridFunction2D rf = band_limited_random(g0, 6, 12345u, 1.6);
	PlancherelReport pr = plancherel_residual(rf, nu);
	CHECK(pr.relative);
	CHECK(pr.value <= 1e-6);
	PlancherelReport pz = plancherel_residual(GridFunction2D::zero(g0), nu);
	CHECK(!pz.relative);
	CHECK(pz.value <= 1e-12);
}

TEST_CASE("self-adjoint decomposition: quantize(f^*) is the adjoint kernel") {
	const double hbar = 1.0;
	GridFunction2D rf = band_limited_random(g0, 6, 12345u, 1.0);
	DecomposeReport r = weyl_selfadjoint_decompose(rf, hbar);
	CHECK(r.adjoint_check <= 1e-10);
	// a real symbol has a hermitian-symmetric transform; its forward image of
	// an even real gaussian is real
	DecomposeReport rg = weyl_selfadjoint_decompose(gauss2(g0), hbar);
	CHECK(rg.tilde_imag_max <= 1e-12);
	CHECK(rg.adjoint_check <= 1e-10);
}

TEST_CASE("moyal star: duality with twisted convolution") {
	const double hbar = 1.0;
	GridFunction2D F = gauss2(g0);
	GridFunction2D G = gauss2(g0, 0.8, 0.7, -0.4);
	GridFunction2D lhs = fourier2d(twisted_convolution(F, G, 1.0 / hbar), hbar, -1);
	GridFunction2D rhs = moyal_star(fourier2d(F, hbar, -1), fourier2d(G, hbar, -1), hbar);
	CHECK(rel_l2(lhs, rhs) <= 1e-8);
}

TEST_CASE("moyal star: generator relation, unit, associativity") {
	const double hbar = 1.0;
	Grid2D zg = g0.conjugate(hbar);
	auto phi = [&](double u1, double u2) {
		GridFunction2D p = GridFunction2D::zero(g0);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				p.values(i, j) = std::exp(cd(0, -(u1 * g0.x(i) + u2 * g0.x(j)) / hbar)) /
				                 (2.0 * M_PI * hbar);
		return p;
	};
	const double u1 = zg.x(n / 2 + 3), u2 = zg.x(n / 2 - 2);
	const double v1 = zg.x(n / 2 - 1), v2 = zg.x(n / 2 + 4);
	GridFunction2D gl = moyal_star(phi(u1, u2), phi(v1, v2), hbar);
	GridFunction2D gr = phi(u1 + v1, u2 + v2);
	gr.values *= std::exp(cd(0, omega_c(u1, u2, v1, v2) / hbar));
	CHECK((gl.values - gr.values).cwiseAbs().maxCoeff() * 2.0 * M_PI * hbar <= 1e-8);

	GridFunction2D unit{g0, Eigen::MatrixXcd::Constant(n, n, 1.0 / (2.0 * M_PI * hbar))};
	GridFunction2D F = gauss2(g0);
	CHECK(rel_l2(moyal_star(unit, F, hbar), F) <= 1e-8);
	CHECK(rel_l2(moyal_star(F, unit, hbar), F) <= 1e-8);

	GridFunction2D G = gauss2(g0, 0.8, 0.7, -0.4);
	GridFunction2D H = gauss2(g0, 1.2, -0.5, 0.3);
	GridFunction2D a1 = moyal_star(moyal_star(F, G, hbar), H, hbar);
	GridFunction2D a2 = moyal_star(F, moyal_star(G, H, hbar), hbar);
	CHECK(rel_l2(a1, a2) <= 1e-8);
}

TEST_CASE("classical limit: commutator approaches minus i hbar poisson bracket") {
	GridFunction2D F = gauss2(g0, 1.0, 0.0, 0.0);
	GridFunction2D G = gauss2(g0, 1.0, 0.5, 0.4);
	GridFunction2D pb = GridFunction2D::zero(g0);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			const double x1 = g0.x(i), x2 = g0.x(j);
			const double f = std::real(F.values(i, j)), gv = std::real(G.values(i, j));
			const double d1f = -x1 * f, d2f = -x2 * f;
			const double d1g = -(x1 - 0.5) * gv, d2g = -(x2 - 0.4) * gv;
			pb.values(i, j) = d1f * d2g - d2f * d1g;
		}
	double r[3];
	const double hbs[3] = {0.1, 0.05, 0.025};
	for (int k = 0; k < 3; ++k) {
		const double hb = hbs[k];
		GridFunction2D comm{g0, (moyal_star(F, G, hb).values - moyal_star(G, F, hb).values) /
		                            (2.0 * M_PI * hb)};
		GridFunction2D resid{g0, comm.values + cd(0, hb) * pb.values};
		r[k] = resid.l2();
	}
	const double sl1 = std::log(r[0] / r[1]) / std::log(2.0);
	const double sl2 = std::log(r[1] / r[2]) / std::log(2.0);
	CHECK(sl1 >= 2.5); // O(hbar^3) residual
	CHECK(sl2 >= 2.5);
}

TEST_CASE("wigner distribution of the hermite states") {
	const double hbar = 1.0;
	Grid2D zg = g0.conjugate(hbar);
	WaveFunction1D xi0 = hermite0(n, L, hbar);
	GridFunction2D om = cross_ambiguity(xi0, xi0, hbar);
	CHECK(std::abs(om.values(n / 2, n / 2) - cd(xi0.l2() * xi0.l2())) <= 1e-10);
	GridFunction2D W0 = wigner_distribution(xi0, xi0, hbar);
	GridFunction2D W0x = GridFunction2D::zero(zg);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			const double z1 = zg.x(i), z2 = zg.x(j);
			W0x.values(i, j) = 2.0 * std::exp(-(z1 * z1 + z2 * z2) / hbar);
		}
	CHECK(rel_l2(W0, W0x) <= 1e-6);
	CHECK(W0.values.imag().cwiseAbs().maxCoeff() <= 1e-8); // reality
	WaveFunction1D xi1 = hermite1(n, L, hbar);
	GridFunction2D W1 = wigner_distribution(xi1, xi1, hbar);
	CHECK(W1.values.real().minCoeff() <= -1.99); // negativity at the origin
	GridFunction2D W1x = GridFunction2D::zero(zg);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			const double r2 = zg.x(i) * zg.x(i) + zg.x(j) * zg.x(j);
			W1x.values(i, j) = 2.0 * (2.0 * r2 / hbar - 1.0) * std::exp(-r2 / hbar);
		}
	CHECK(rel_l2(W1, W1x) <= 1e-4);
}

TEST_CASE("fixtures are deterministic under the seed") {
	GridFunction2D a = band_limited_random(g0, 4, 77u, 1.2);
	GridFunction2D b = band_limited_random(g0, 4, 77u, 1.2);
	CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
	GridFunction2D c = band_limited_random(g0, 4, 78u, 1.2);
	CHECK((a.values - c.values).cwiseAbs().maxCoeff() > 0.0);
}
