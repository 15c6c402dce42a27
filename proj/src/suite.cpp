#include "phasekit/suite.hpp"

#include "phasekit/catalog.hpp"
#include "phasekit/lattice.hpp"
#include "phasekit/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace pk {

namespace {

using cd = std::complex<double>;

double rel_l2(const GridFunction2D &a, const GridFunction2D &b) {
	GridFunction2D d{a.grid, a.values - b.values};
	return d.l2() / b.l2();
}

double omega_c(double x1, double x2, double y1, double y2) {
	return 0.5 * (x1 * y2 - y1 * x2);
}

} // namespace

void SuiteConfig::validate() const {
	if (grid_n < 2 || (grid_n & (grid_n - 1)) != 0)
		throw std::invalid_argument("grid_n must be a power of two");
	if (extent <= 0) throw std::invalid_argument("extent must be positive");
	if (hbar <= 0) throw std::invalid_argument("hbar must be positive");
	if (nu <= 0) throw std::invalid_argument("nu must be positive");
}

std::map<std::string, double> default_tolerances(int grid_n) {
	// coarse grids resolve the Gaussian fixtures less sharply; the composed
	// pipelines (quantize banding, Wigner interpolation) are relaxed there
	const bool coarse = grid_n < 64;
	const double c = coarse ? 100.0 : 1.0;
	return {
	    {"catalog", 0.0},
	    {"rep_composition", 1e-12},
	    {"fourier_round_trip", 1e-10 * c},
	    {"weyl_round_trip", coarse ? 1e-4 : 1e-8},
	    {"trace_calibration", coarse ? 1e-4 : 1e-8},
	    {"homomorphism", 1e-6 * c},
	    {"plancherel_gauss", 1e-8 * c},
	    {"plancherel_random", 1e-6 * c},
	    {"adjoint_decompose", 1e-10 * c},
	    {"moyal_duality", 1e-8 * c},
	    {"moyal_associativity", coarse ? 1e-3 : 1e-8},
	    {"moyal_generator", 1e-8 * c},
	    {"moyal_unit", 1e-8 * c},
	    {"classical_limit_slope", -2.5}, // negated bound: pass iff slope >= 2.5
	    {"wigner_ground", coarse ? 1e-2 : 1e-6},
	    {"wigner_reality", 1e-8 * c},
	    {"wigner_excited_min", -1.99}, // signed bound: minimum must dip below
	    {"haar_op_hwlia", 1e-12},
	    {"haar_op_hwsa", 1e-12},
	    {"haar_dual_hwsa_plain", 1e-12},
	    {"haar_dual_hwsa_phased", 1e-12},
	    {"yang_baxter_n8", 1e-12},
	};
}

std::vector<CheckRecord> run_suite(const SuiteConfig &cfg) {
	cfg.validate();
	std::map<std::string, double> tol = default_tolerances(cfg.grid_n);
	// the banded kernel loses accuracy away from nu = 1 (diagonal width ~1/nu
	// of the domain); keep the round trip honest but within its envelope
	if (cfg.nu > 1.0)
		tol["weyl_round_trip"] = std::max(tol["weyl_round_trip"], 1e-4);
	for (const auto &[k, v] : cfg.tol) {
		if (!tol.count(k)) throw std::invalid_argument("unknown check: " + k);
		tol[k] = v;
	}
	std::vector<CheckRecord> out;
	auto rec = [&](const std::string &name, double value) {
		out.push_back({name, value, tol.at(name), value <= tol.at(name)});
	};

	const int n = cfg.grid_n;
	const double L = cfg.extent, hbar = cfg.hbar, nu = cfg.nu;
	const Grid2D g0{n, L};
	const double h = g0.spacing();

	// symbolic catalog: value = number of verdict mismatches
	int bad = 0;
	for (const auto &r : verify_all())
		if (r.holds != r.expected_holds) ++bad;
	rec("catalog", double(bad));

	// projective representation composition on cocycle-compatible points
	{
		WaveFunction1D xi = hermite0(n, L, hbar);
		WaveFunction1D x1 = hermite1(n, L, hbar);
		xi.values += 0.3 * x1.values;
		const double u = 2.0 * M_PI / (nu * L);
		const int ka = 3, kb = -5;
		const double x2a = 2 * u, x2b = -3 * u;
		WaveFunction1D lhs = apply_projective_rep(
		    ka * h, x2a, apply_projective_rep(kb * h, x2b, xi, nu), nu);
		WaveFunction1D rhs = apply_projective_rep((ka + kb) * h, x2a + x2b, xi, nu);
		const cd ph = std::exp(cd(0, nu * omega_c(ka * h, x2a, kb * h, x2b)));
		double resid = 0;
		for (int j = 0; j < n; ++j)
			resid = std::max(resid, std::abs(lhs.values[j] - ph * rhs.values[j]));
		rec("rep_composition", resid);
	}

	GridFunction2D F = gauss2(g0);
	GridFunction2D G = gauss2(g0, 0.8, 0.7, -0.4);

	rec("fourier_round_trip", rel_l2(fourier2d(fourier2d(F, hbar, -1), hbar, +1), F));

	OperatorKernel K = weyl_quantize(F, nu);
	rec("weyl_round_trip", rel_l2(wigner_recover(K), F));
	{
		double t = std::abs(operator_trace(K) - cd(1.0));
		if (n >= 64 && nu <= 1.0) { // the doubled probe needs 2 nu inside [1,2]
			OperatorKernel K2 = weyl_quantize(F, 2.0 * nu);
			t = std::max(t, std::abs(operator_trace(K2) - cd(1.0)));
		}
		rec("trace_calibration", t);
	}
	{
		GridFunction2D FG = twisted_convolution(F, G, nu);
		OperatorKernel Kg = weyl_quantize(G, nu), Kfg = weyl_quantize(FG, nu);
		Eigen::MatrixXcd prod = h * (K.values * Kg.values);
		rec("homomorphism", (Kfg.values - prod).norm() / prod.norm());
	}

	rec("plancherel_gauss", plancherel_residual(F, nu).value);
	GridFunction2D rf = band_limited_random(g0, 6, cfg.seed, 1.6);
	rec("plancherel_random", plancherel_residual(rf, nu).value);
	rec("adjoint_decompose",
	    weyl_selfadjoint_decompose(band_limited_random(g0, 6, cfg.seed, 1.0), hbar)
	        .adjoint_check);

	{
		GridFunction2D lhs = fourier2d(twisted_convolution(F, G, 1.0 / hbar), hbar, -1);
		GridFunction2D rhs =
		    moyal_star(fourier2d(F, hbar, -1), fourier2d(G, hbar, -1), hbar);
		rec("moyal_duality", rel_l2(lhs, rhs));
	}
	{
		GridFunction2D H = gauss2(g0, 1.2, -0.5, 0.3);
		GridFunction2D a1 = moyal_star(moyal_star(F, G, hbar), H, hbar);
		GridFunction2D a2 = moyal_star(F, moyal_star(G, H, hbar), hbar);
		rec("moyal_associativity", rel_l2(a1, a2));
	}
	{
		const Grid2D zg = g0.conjugate(hbar);
		auto phi = [&](double u1, double u2) {
			GridFunction2D p = GridFunction2D::zero(g0);
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
					p.values(i, j) =
					    std::exp(cd(0, -(u1 * g0.x(i) + u2 * g0.x(j)) / hbar)) /
					    (2.0 * M_PI * hbar);
			return p;
		};
		const double u1 = zg.x(n / 2 + 3), u2 = zg.x(n / 2 - 2);
		const double v1 = zg.x(n / 2 - 1), v2 = zg.x(n / 2 + 4);
		GridFunction2D gl = moyal_star(phi(u1, u2), phi(v1, v2), hbar);
		GridFunction2D gr = phi(u1 + v1, u2 + v2);
		gr.values *= std::exp(cd(0, omega_c(u1, u2, v1, v2) / hbar));
		rec("moyal_generator",
		    (gl.values - gr.values).cwiseAbs().maxCoeff() * 2.0 * M_PI * hbar);
		GridFunction2D unit{g0,
		                    Eigen::MatrixXcd::Constant(n, n, 1.0 / (2.0 * M_PI * hbar))};
		rec("moyal_unit", rel_l2(moyal_star(unit, F, hbar), F));
	}
	{
		GridFunction2D pb = GridFunction2D::zero(g0);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				const double x1 = g0.x(i), x2 = g0.x(j);
				const double f = std::real(F.values(i, j));
				const double gv = std::real(G.values(i, j));
				const double sg = 0.8 * 0.8;
				const double d1f = -x1 * f, d2f = -x2 * f;
				const double d1g = -(x1 - 0.7) / sg * gv, d2g = -(x2 + 0.4) / sg * gv;
				pb.values(i, j) = d1f * d2g - d2f * d1g;
			}
		// the conjugate-grid extent 2 pi hb / h shrinks with hb; scale the
		// ladder so coarse grids keep it resolved
		const double hb0 = std::min(hbar, 0.1) * (64.0 / n) * (64.0 / n);
		double r[3];
		for (int k = 0; k < 3; ++k) {
			const double hb = hb0 / (1 << k);
			GridFunction2D comm{g0, (moyal_star(F, G, hb).values -
			                         moyal_star(G, F, hb).values) /
			                            (2.0 * M_PI * hb)};
			GridFunction2D resid{g0, comm.values + cd(0, hb) * pb.values};
			r[k] = resid.l2();
		}
		const double sl = std::min(std::log(r[0] / r[1]), std::log(r[1] / r[2])) /
		                  std::log(2.0);
		rec("classical_limit_slope", -sl); // negated: pass iff slope >= bound
	}
	{
		// the hermite states have width sqrt(hbar); scale the window with it
		const double Lw = L * std::sqrt(hbar);
		const Grid2D zg = Grid2D{n, Lw}.conjugate(hbar);
		WaveFunction1D xi0 = hermite0(n, Lw, hbar);
		GridFunction2D W0 = wigner_distribution(xi0, xi0, hbar);
		GridFunction2D W0x = GridFunction2D::zero(zg);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				const double r2 = zg.x(i) * zg.x(i) + zg.x(j) * zg.x(j);
				W0x.values(i, j) = 2.0 * std::exp(-r2 / hbar);
			}
		rec("wigner_ground", rel_l2(W0, W0x));
		rec("wigner_reality", W0.values.imag().cwiseAbs().maxCoeff());
		WaveFunction1D xi1 = hermite1(n, Lw, hbar);
		GridFunction2D W1 = wigner_distribution(xi1, xi1, hbar);
		rec("wigner_excited_min", W1.values.real().minCoeff());
	}

	{
		HaarResiduals hr =
		    haar_axiom_residuals(lattice_random(2, cfg.seed), lattice_random(2, cfg.seed + 1),
		                         1.0);
		rec("haar_op_hwlia", hr.op_hwlia);
		rec("haar_op_hwsa", hr.op_hwsa);
		rec("haar_dual_hwsa_plain", hr.dual_hwsa_plain);
		rec("haar_dual_hwsa_phased", hr.dual_hwsa_phased);
	}
	rec("yang_baxter_n8", yang_baxter_residual(8));

	return out;
}

bool all_pass(const std::vector<CheckRecord> &recs) {
	for (const auto &r : recs)
		if (!r.pass) return false;
	return true;
}

} // namespace pk
