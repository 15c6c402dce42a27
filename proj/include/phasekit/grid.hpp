#pragma once
// Discretization plumbing: centered periodic grids on [-L/2, L/2) per axis
// and the conjugate (Fourier) grid with spacing 2*pi*hbar/(n*h).

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace pk {

struct Grid2D {
	int n = 64;
	double extent = 16.0;

	double spacing() const { return extent / n; }
	double x(int j) const { return (j - n / 2) * spacing(); }

	Grid2D conjugate(double hbar) const {
		const double hz = 2.0 * M_PI * hbar / (n * spacing());
		return {n, n * hz};
	}

	friend bool operator==(const Grid2D &a, const Grid2D &b) {
		return a.n == b.n && a.extent == b.extent;
	}
};

struct GridFunction2D {
	Grid2D grid;
	Eigen::MatrixXcd values; // values(i,j) = f(x_i, x_j)

	static GridFunction2D zero(const Grid2D &g) {
		return {g, Eigen::MatrixXcd::Zero(g.n, g.n)};
	}
	double l2() const {
		const double h = grid.spacing();
		return std::sqrt(h * h * values.squaredNorm());
	}
};

struct WaveFunction1D {
	int n = 64;
	double extent = 16.0;
	Eigen::VectorXcd values;

	double spacing() const { return extent / n; }
	double q(int j) const { return (j - n / 2) * spacing(); }
	double l2() const { return std::sqrt(spacing() * values.squaredNorm()); }
};

struct OperatorKernel {
	int n = 64;
	double extent = 16.0;
	double nu = 1.0;
	Eigen::MatrixXcd values; // K(q,u)

	double spacing() const { return extent / n; }
};

inline void require_same_grid(const Grid2D &a, const Grid2D &b) {
	if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

} // namespace pk
