#include "phasekit/lattice.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace pk {

namespace {

using cd = std::complex<double>;
const cd I(0.0, 1.0);

double omega_c(double x1, double x2, double y1, double y2) {
	return 0.5 * (x1 * y2 - y1 * x2);
}

double theta_c(double q, double x1, double x2) { return -0.5 * (2 * q + x1) * x2; }

template <class K> void add_term(std::map<K, cd> &m, const K &k, cd v) {
	cd &slot = m[k];
	slot += v;
	if (slot == cd(0)) m.erase(k);
}

template <class K>
double map_residual(const std::map<K, cd> &a, const std::map<K, cd> &b) {
	double mx = 0;
	for (const auto &[k, v] : a) {
		auto it = b.find(k);
		mx = std::max(mx, std::abs(v - (it == b.end() ? cd(0) : it->second)));
	}
	for (const auto &[k, v] : b)
		if (!a.count(k)) mx = std::max(mx, std::abs(v));
	return mx;
}

} // namespace

LatticeElement lattice_embed(const LatticeFunction &f) {
	LatticeElement out;
	for (const auto &[x, v] : f) add_term(out, {x[0], x[1], 0}, v);
	return out;
}

LatticeElement lattice_unit() { return {{{0, 0, 0}, cd(1)}}; }

LatticeElement lattice_mult(const LatticeElement &a, const LatticeElement &b,
                            double nu) {
	LatticeElement out;
	for (const auto &[ka, A] : a)
		for (const auto &[kb, B] : b) {
			const cd amp = A * B *
			               std::exp(I * (nu * (-kb[2] * double(ka[0]) +
			                                   omega_c(ka[0], ka[1], kb[0], kb[1]))));
			add_term(out, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, amp);
		}
	return out;
}

LatticeElement2 lattice_mult2(const LatticeElement2 &a, const LatticeElement2 &b,
                              double nu) {
	LatticeElement2 out;
	for (const auto &[ka, A] : a)
		for (const auto &[kb, B] : b) {
			const cd amp = A * B *
			               std::exp(I * (nu * (-kb[4] * double(ka[0]) +
			                                   omega_c(ka[0], ka[1], kb[0], kb[1]) +
			                                   omega_c(ka[2], ka[3], kb[2], kb[3]))));
			add_term(out,
			         {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3],
			          ka[4] + kb[4]},
			         amp);
		}
	return out;
}

LatticeElement2 lattice_coproduct(const LatticeElement &f, double nu) {
	// Theta(q;-x) = x2 q - x1 x2 / 2: alpha += x2, amplitude * e^{-i nu x1 x2/2}
	LatticeElement2 out;
	for (const auto &[k, A] : f)
		add_term(out, {k[0], k[1], k[0], k[1], k[2] + k[1]},
		         A * std::exp(I * (-0.5 * nu * k[0] * k[1])));
	return out;
}

LatticeElement lattice_dagger(const LatticeElement &f) {
	LatticeElement out;
	for (const auto &[k, A] : f) add_term(out, {-k[0], -k[1], -k[2]}, std::conj(A));
	return out;
}

LatticeElement lattice_kappa(const LatticeElement &f) {
	LatticeElement out;
	for (const auto &[k, A] : f) add_term(out, {-k[0], -k[1], k[2] - 2 * k[1]}, A);
	return out;
}

LatticeElement lattice_phi_leg2(const LatticeElement2 &f2) {
	LatticeElement out;
	for (const auto &[k, A] : f2)
		if (k[2] == 0 && k[3] == 0) add_term(out, {k[0], k[1], k[4]}, A);
	return out;
}

LatticeElement2 lattice_tens(const LatticeElement &a, const LatticeElement &b) {
	LatticeElement2 out;
	for (const auto &[ka, A] : a)
		for (const auto &[kb, B] : b)
			add_term(out, {ka[0], ka[1], kb[0], kb[1], ka[2] + kb[2]}, A * B);
	return out;
}

double lattice_residual(const LatticeElement &a, const LatticeElement &b) {
	return map_residual(a, b);
}

double lattice_residual2(const LatticeElement2 &a, const LatticeElement2 &b) {
	return map_residual(a, b);
}

HaarResiduals haar_axiom_residuals(const LatticeFunction &f, const LatticeFunction &g,
                                   double nu, double q_sample) {
	HaarResiduals r;
	const LatticeElement fe = lattice_embed(f), ge = lattice_embed(g);

	// hwlia: (id (x) phi) Delta f = phi(f) 1
	LatticeElement lhs = lattice_phi_leg2(lattice_coproduct(fe, nu));
	LatticeElement rhs;
	for (const auto &[k, A] : fe)
		if (k[0] == 0 && k[1] == 0) rhs[{0, 0, k[2]}] += A;
	r.op_hwlia = lattice_residual(lhs, rhs);

	// hwsa: (id(x)phi)[(1(x)g^dag) Delta f] = kappa (id(x)phi)[Delta(g^dag)(1(x)f)]
	const LatticeElement gd = lattice_dagger(ge);
	const LatticeElement one = lattice_unit();
	lhs = lattice_phi_leg2(
	    lattice_mult2(lattice_tens(one, gd), lattice_coproduct(fe, nu), nu));
	rhs = lattice_kappa(lattice_phi_leg2(
	    lattice_mult2(lattice_coproduct(gd, nu), lattice_tens(one, fe), nu)));
	r.op_hwsa = lattice_residual(lhs, rhs);

	// dual side: Delta f(x,y) = e^{-i nu Omega(x,y)} f(x+y);
	// invariance  sum_y Delta f(x,y) conj(g(y)) = sum_z conj(Delta g(-x,z)) f(z)
	auto fval = [](const LatticeFunction &h, int a, int b) {
		auto it = h.find({a, b});
		return it == h.end() ? cd(0) : it->second;
	};
	auto dual_cop = [&](const LatticeFunction &h, int x1, int x2, int y1, int y2) {
		return std::exp(-I * (nu * omega_c(x1, x2, y1, y2))) * fval(h, x1 + y1, x2 + y2);
	};
	std::map<LatticePoint, bool> xs;
	xs[{0, 0}] = true;
	for (const auto &[a, va] : f)
		for (const auto &[b, vb] : g) xs[{a[0] - b[0], a[1] - b[1]}] = true;
	for (const auto &[x, used] : xs) {
		cd l = 0, lph = 0, rr = 0;
		for (const auto &[y, gy] : g) {
			l += dual_cop(f, x[0], x[1], y[0], y[1]) * std::conj(gy);
			// phased route at the sampled base point:
			// g°(y) = e^{-i nu [Th(q;y)-Th(q;-y)]} conj g(y); the pairing carries
			// e^{-i nu Th(q;-y)} e^{+i nu Th(q;y)}
			const double tp = theta_c(q_sample, y[0], y[1]);
			const double tm = theta_c(q_sample, -y[0], -y[1]);
			const cd go = std::exp(-I * (nu * (tp - tm))) * std::conj(gy);
			lph += std::exp(-I * (nu * tm)) * std::exp(I * (nu * tp)) * go *
			       dual_cop(f, x[0], x[1], y[0], y[1]);
		}
		for (const auto &[z, fz] : f)
			rr += std::conj(dual_cop(g, -x[0], -x[1], z[0], z[1])) * fz;
		r.dual_hwsa_plain = std::max(r.dual_hwsa_plain, std::abs(l - rr));
		r.dual_hwsa_phased = std::max(r.dual_hwsa_phased, std::abs(lph - rr));
	}
	return r;
}

LatticeFunction lattice_random(int r, unsigned seed) {
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> nd(0.0, 1.0);
	LatticeFunction f;
	for (int i = -r; i <= r; ++i)
		for (int j = -r; j <= r; ++j) {
			const double re = nd(rng), im = nd(rng);
			f[{i, j}] = cd(re, im);
		}
	return f;
}

namespace {

// the Yang-Baxter kernel on Z_n^2 at embedding spacing sqrt(2 pi): the free
// leg is w = (x+y-z) mod n and the phase is the exact sign
// (-1)^{det(x,y)-det(z,w)} on representatives in [0,n).
struct YbeKernel {
	int n, N;
	explicit YbeKernel(int n_) : n(n_), N(n_ * n_) {}

	int wrap(int a) const { return ((a % n) + n) % n; }
	int idx(int a1, int a2) const { return a1 * n + a2; }
	int det(int a, int b) const { return (a / n) * (b % n) - (a % n) * (b / n); }
	int partner(int a, int b, int u) const {
		return idx(wrap(a / n + b / n - u / n), wrap(a % n + b % n - u % n));
	}
	double sign(int a, int b, int u, int w) const {
		return ((det(a, b) - det(u, w)) % 2 + 2) % 2 == 0 ? 1.0 : -1.0;
	}

	// contractions of R acting on legs (1,2), (1,3), (2,3) of F in C^{N^3}
	template <class T> std::vector<T> a12(const std::vector<T> &F) const {
		std::vector<T> out(F.size(), T(0));
		for (int a = 0; a < N; ++a)
			for (int b = 0; b < N; ++b)
				for (int u = 0; u < N; ++u) {
					const int w = partner(a, b, u);
					const T s = T(sign(a, b, u, w));
					for (int c = 0; c < N; ++c)
						out[(a * N + b) * N + c] += s * F[(u * N + w) * N + c];
				}
		return out;
	}
	template <class T> std::vector<T> a13(const std::vector<T> &F) const {
		std::vector<T> out(F.size(), T(0));
		for (int a = 0; a < N; ++a)
			for (int c = 0; c < N; ++c)
				for (int u = 0; u < N; ++u) {
					const int w = partner(a, c, u);
					const T s = T(sign(a, c, u, w));
					for (int b = 0; b < N; ++b)
						out[(a * N + b) * N + c] += s * F[(u * N + b) * N + w];
				}
		return out;
	}
	template <class T> std::vector<T> a23(const std::vector<T> &F) const {
		std::vector<T> out(F.size(), T(0));
		for (int b = 0; b < N; ++b)
			for (int c = 0; c < N; ++c)
				for (int u = 0; u < N; ++u) {
					const int w = partner(b, c, u);
					const T s = T(sign(b, c, u, w));
					for (int a = 0; a < N; ++a)
						out[(a * N + b) * N + c] += s * F[(a * N + u) * N + w];
				}
		return out;
	}
	template <class T> double both_sides(const std::vector<T> &F) const {
		const std::vector<T> A = a12(a13(a23(F)));
		const std::vector<T> B = a23(a13(a12(F)));
		double mx = 0, sc = 0;
		for (size_t i = 0; i < A.size(); ++i) {
			mx = std::max(mx, std::abs(A[i] - B[i]));
			sc = std::max(sc, std::abs(A[i]));
		}
		return sc == 0 ? mx : mx / sc;
	}
};

} // namespace

double yang_baxter_residual(int lattice_n) {
	if (lattice_n < 1 || lattice_n > 16)
		throw std::invalid_argument("lattice size must be in [1, 16]");
	if (lattice_n == 1) return 0.0; // single point: both sides are identical sums
	const YbeKernel ker(lattice_n);
	const int N3 = ker.N * ker.N * ker.N;
	if (lattice_n <= 4) {
		// exhaustive: every basis tensor, exact integer arithmetic
		double mx = 0;
		std::vector<double> F(N3, 0.0);
		for (int i = 0; i < N3; ++i) {
			F[i] = 1.0;
			mx = std::max(mx, ker.both_sides(F));
			F[i] = 0.0;
		}
		return mx;
	}
	std::mt19937_64 rng(0);
	std::normal_distribution<double> nd(0.0, 1.0);
	double mx = 0;
	for (int p = 0; p < 3; ++p) {
		std::vector<cd> F(N3);
		for (auto &v : F) {
			const double re = nd(rng), im = nd(rng);
			v = cd(re, im);
		}
		mx = std::max(mx, ker.both_sides(F));
	}
	return mx;
}

} // namespace pk
