#include "phasekit/numerics.hpp"

#include <fftw3.h>

#include <cmath>
#include <random>

namespace pk {

namespace {

using cd = std::complex<double>;
const cd I(0.0, 1.0);

double theta_c(double q, double x1, double x2) { return -0.5 * (2 * q + x1) * x2; }

Eigen::VectorXd points(int n, double spacing) {
	Eigen::VectorXd v(n);
	for (int j = 0; j < n; ++j) v[j] = (j - n / 2) * spacing;
	return v;
}

// pairing matrix M(k,j) = e^{sgn * i * out[k] * in[j] / hbar}
Eigen::MatrixXcd pairing(const Eigen::VectorXd &out, const Eigen::VectorXd &in,
                         double sgn, double hbar) {
	Eigen::MatrixXcd M(out.size(), in.size());
	for (int k = 0; k < out.size(); ++k)
		for (int j = 0; j < in.size(); ++j)
			M(k, j) = std::exp(I * (sgn * out[k] * in[j] / hbar));
	return M;
}

Eigen::VectorXcd fft(const Eigen::VectorXcd &v, int sign) {
	const int n = int(v.size());
	Eigen::VectorXcd out(n);
	fftw_plan plan = fftw_plan_dft_1d(
	    n, reinterpret_cast<fftw_complex *>(const_cast<cd *>(v.data())),
	    reinterpret_cast<fftw_complex *>(out.data()), sign, FFTW_ESTIMATE);
	fftw_execute(plan);
	fftw_destroy_plan(plan);
	return out;
}

// band-limited upsample by two; the Nyquist bin is split half-half
Eigen::VectorXcd up2(const Eigen::VectorXcd &v) {
	const int n = int(v.size());
	Eigen::VectorXcd vk = fft(v, FFTW_FORWARD);
	Eigen::VectorXcd wk = Eigen::VectorXcd::Zero(2 * n);
	for (int k = 0; k < n / 2; ++k) wk[k] = vk[k];
	for (int k = 1; k < n / 2; ++k) wk[2 * n - k] = vk[n - k];
	wk[n / 2] = 0.5 * vk[n / 2];
	wk[2 * n - n / 2] = 0.5 * vk[n / 2];
	Eigen::VectorXcd w = fft(wk, FFTW_BACKWARD);
	return w / double(n); // ifft normalization 1/(2n), times the factor 2
}

} // namespace

WaveFunction1D apply_projective_rep(double x1, double x2, const WaveFunction1D &xi,
                                    double nu) {
	const int n = xi.n;
	const double h = xi.spacing();
	const double steps = x1 / h;
	const int k = int(std::lround(steps));
	if (std::abs(steps - k) > 1e-9)
		throw std::invalid_argument("translation x1 must sit on the grid");
	WaveFunction1D out = xi;
	for (int j = 0; j < n; ++j) {
		const double q = xi.q(j);
		const cd ph = std::exp(-I * nu * theta_c(q, -x1, -x2));
		out.values[j] = ph * xi.values[(j - k) % n >= 0 ? (j - k) % n : (j - k) % n + n];
	}
	return out;
}

OperatorKernel weyl_quantize(const GridFunction2D &f, double nu) {
	const int n = f.grid.n;
	const double h = f.grid.spacing();
	const Eigen::VectorXd x = points(n, h);
	OperatorKernel K{n, f.grid.extent, nu, Eigen::MatrixXcd::Zero(n, n)};
	for (int iq = 0; iq < n; ++iq)
		for (int iu = 0; iu < n; ++iu) {
			const int s = iq - iu + n / 2; // index of q-u
			if (s < 0 || s >= n) continue; // banded kernel
			cd acc = 0;
			for (int j = 0; j < n; ++j)
				acc += std::exp(-I * (nu * (x[iq] + x[iu]) * x[j] / 2.0)) * f.values(s, j);
			K.values(iq, iu) = h * acc;
		}
	return K;
}

std::complex<double> operator_trace(const OperatorKernel &K) {
	return (K.nu / (2.0 * M_PI)) * K.spacing() * K.values.trace();
}

GridFunction2D wigner_recover(const OperatorKernel &K) {
	const int n = K.n;
	const double h = K.spacing();
	const double c = K.nu / (2.0 * M_PI);
	const Eigen::VectorXd x = points(n, h);
	GridFunction2D f = GridFunction2D::zero({n, K.extent});
	for (int i1 = 0; i1 < n; ++i1)
		for (int i2 = 0; i2 < n; ++i2) {
			cd acc = 0;
			for (int iq = 0; iq < n; ++iq) {
				const int iqp = iq + i1 - n / 2; // index of q + x1
				if (iqp < 0 || iqp >= n) continue;
				acc += std::exp(I * (K.nu * (x[iq] + x[i1] / 2.0) * x[i2])) *
				       K.values(iqp, iq);
			}
			f.values(i1, i2) = c * h * acc;
		}
	return f;
}

GridFunction2D twisted_convolution(const GridFunction2D &f, const GridFunction2D &g,
                                   double nu) {
	require_same_grid(f.grid, g.grid);
	const int n = f.grid.n;
	const double h = f.grid.spacing();
	const Eigen::VectorXd x = points(n, h);
	// phase split e^{i nu Omega(x,z)} = e^{i nu x1 z2/2} e^{-i nu z1 x2/2}
	Eigen::MatrixXcd p1(n, n), p2(n, n); // p1(a,j), p2(i,b)
	for (int a = 0; a < n; ++a)
		for (int j = 0; j < n; ++j) p1(a, j) = std::exp(I * (nu * x[a] * x[j] / 2.0));
	for (int i = 0; i < n; ++i)
		for (int b = 0; b < n; ++b) p2(i, b) = std::exp(-I * (nu * x[i] * x[b] / 2.0));
	GridFunction2D out = GridFunction2D::zero(f.grid);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			const cd c = h * h * f.values(a, b);
			if (c == cd(0)) continue;
			for (int i = 0; i < n; ++i) {
				const int si = (((i - a + n / 2) % n) + n) % n;
				const cd ci = c * p2(i, b);
				for (int j = 0; j < n; ++j) {
					const int sj = (((j - b + n / 2) % n) + n) % n;
					out.values(i, j) += ci * p1(a, j) * g.values(si, sj);
				}
			}
		}
	return out;
}

GridFunction2D fourier2d(const GridFunction2D &f, double hbar, int direction) {
	const int n = f.grid.n;
	if (direction == -1) {
		const double h = f.grid.spacing();
		const Grid2D zg = f.grid.conjugate(hbar);
		const Eigen::VectorXd x = points(n, h), z = points(n, zg.spacing());
		const Eigen::MatrixXcd M = pairing(z, x, -1.0, hbar);
		return {zg, (h * h / (2.0 * M_PI * hbar)) * (M * f.values * M.transpose())};
	}
	if (direction == 1) {
		// input lives on the conjugate grid of an original grid with
		// spacing h = 2 pi hbar / (n hz)
		const double hz = f.grid.spacing();
		const double h = 2.0 * M_PI * hbar / (n * hz);
		const Grid2D xg{n, n * h};
		const Eigen::VectorXd x = points(n, h), z = points(n, hz);
		const Eigen::MatrixXcd M = pairing(x, z, +1.0, hbar);
		return {xg, (hz * hz / (2.0 * M_PI * hbar)) * (M * f.values * M.transpose())};
	}
	throw std::invalid_argument("direction must be -1 or +1");
}

GridFunction2D inv_fourier_to_conj(const GridFunction2D &F, double hbar) {
	const int n = F.grid.n;
	const double h = F.grid.spacing();
	const Grid2D zg = F.grid.conjugate(hbar);
	const Eigen::VectorXd x = points(n, h), z = points(n, zg.spacing());
	const Eigen::MatrixXcd M = pairing(z, x, +1.0, hbar);
	return {zg, (h * h / (2.0 * M_PI * hbar)) * (M * F.values * M.transpose())};
}

GridFunction2D fwd_fourier_from_conj(const GridFunction2D &f, double hbar) {
	const int n = f.grid.n;
	const double hz = f.grid.spacing();
	const double h = 2.0 * M_PI * hbar / (n * hz);
	const Grid2D xg{n, n * h};
	const Eigen::VectorXd x = points(n, h), z = points(n, hz);
	const Eigen::MatrixXcd M = pairing(x, z, -1.0, hbar);
	return {xg, (hz * hz / (2.0 * M_PI * hbar)) * (M * f.values * M.transpose())};
}

GridFunction2D moyal_star(const GridFunction2D &F, const GridFunction2D &G,
                          double hbar) {
	require_same_grid(F.grid, G.grid);
	GridFunction2D f = inv_fourier_to_conj(F, hbar);
	GridFunction2D g = inv_fourier_to_conj(G, hbar);
	GridFunction2D tc = twisted_convolution(f, g, 1.0 / hbar);
	return fwd_fourier_from_conj(tc, hbar);
}

GridFunction2D cross_ambiguity(const WaveFunction1D &xi, const WaveFunction1D &chi,
                               double hbar) {
	if (xi.n != chi.n || xi.extent != chi.extent)
		throw std::invalid_argument("grid mismatch");
	const int n = xi.n;
	const double h = xi.spacing();
	const Eigen::VectorXd q = points(n, h), x = points(n, h);
	const Eigen::VectorXcd xiu = up2(xi.values), chiu = up2(chi.values);
	GridFunction2D om = GridFunction2D::zero({n, xi.extent});
	for (int i1 = 0; i1 < n; ++i1) {
		const int sh = i1 - n / 2;
		Eigen::VectorXcd ab(n);
		for (int j = 0; j < n; ++j) {
			const int ia = ((2 * j + sh) % (2 * n) + 2 * n) % (2 * n);
			const int ib = ((2 * j - sh) % (2 * n) + 2 * n) % (2 * n);
			ab[j] = xiu[ia] * std::conj(chiu[ib]);
		}
		for (int i2 = 0; i2 < n; ++i2) {
			cd acc = 0;
			for (int j = 0; j < n; ++j) acc += std::exp(I * (q[j] * x[i2] / hbar)) * ab[j];
			om.values(i1, i2) = h * acc;
		}
	}
	return om;
}

GridFunction2D wigner_distribution(const WaveFunction1D &xi, const WaveFunction1D &chi,
                                   double hbar) {
	return fourier2d(cross_ambiguity(xi, chi, hbar), hbar, -1);
}

PlancherelReport plancherel_residual(const GridFunction2D &f, double nu) {
	const double h = f.grid.spacing();
	const double nrm2 = h * h * f.values.squaredNorm();
	OperatorKernel K = weyl_quantize(f, nu);
	const double trKK = (nu / (2.0 * M_PI)) * h * h * K.values.squaredNorm();
	if (nrm2 == 0.0) return {std::abs(trKK), false};
	return {std::abs(nrm2 - trKK) / nrm2, true};
}

DecomposeReport weyl_selfadjoint_decompose(const GridFunction2D &f, double hbar) {
	const int n = f.grid.n;
	const double nu = 1.0 / hbar;
	DecomposeReport r{fourier2d(f, hbar, -1), 0.0, 0.0};
	// f^*(x) = conj(f(-x)); quantize(f^*) must be the adjoint kernel
	GridFunction2D fs = GridFunction2D::zero(f.grid);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			fs.values(i, j) = std::conj(f.values((n - i) % n, (n - j) % n));
	OperatorKernel K = weyl_quantize(f, nu);
	OperatorKernel Ks = weyl_quantize(fs, nu);
	r.adjoint_check = (Ks.values - K.values.adjoint()).cwiseAbs().maxCoeff();
	r.tilde_imag_max = r.tilde_f.values.imag().cwiseAbs().maxCoeff();
	return r;
}

GridFunction2D gauss2(const Grid2D &g, double s, double c1, double c2) {
	GridFunction2D f = GridFunction2D::zero(g);
	for (int i = 0; i < g.n; ++i)
		for (int j = 0; j < g.n; ++j) {
			const double d1 = g.x(i) - c1, d2 = g.x(j) - c2;
			f.values(i, j) = std::exp(-(d1 * d1 + d2 * d2) / (2 * s * s));
		}
	return f;
}

WaveFunction1D hermite0(int n, double extent, double hbar) {
	WaveFunction1D xi{n, extent, Eigen::VectorXcd(n)};
	const double a = std::pow(M_PI * hbar, -0.25);
	for (int j = 0; j < n; ++j) {
		const double q = xi.q(j);
		xi.values[j] = a * std::exp(-q * q / (2 * hbar));
	}
	return xi;
}

WaveFunction1D hermite1(int n, double extent, double hbar) {
	WaveFunction1D xi{n, extent, Eigen::VectorXcd(n)};
	const double a = std::pow(M_PI * hbar, -0.25) * std::sqrt(2.0 / hbar);
	for (int j = 0; j < n; ++j) {
		const double q = xi.q(j);
		xi.values[j] = a * q * std::exp(-q * q / (2 * hbar));
	}
	return xi;
}

GridFunction2D band_limited_random(const Grid2D &g, int kk, unsigned seed,
                                   double window_s) {
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> nd(0.0, 1.0);
	GridFunction2D f = GridFunction2D::zero(g);
	for (int p = -kk; p <= kk; ++p)
		for (int q = -kk; q <= kk; ++q) {
			const cd c(nd(rng), nd(rng));
			for (int i = 0; i < g.n; ++i)
				for (int j = 0; j < g.n; ++j)
					f.values(i, j) +=
					    c * std::exp(I * (2.0 * M_PI * (p * g.x(i) + q * g.x(j)) / g.extent));
		}
	GridFunction2D w = gauss2(g, window_s);
	f.values = f.values.cwiseProduct(w.values);
	return f;
}

} // namespace pk
