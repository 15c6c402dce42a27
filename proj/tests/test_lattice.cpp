#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/lattice.hpp"

#include <complex>

using namespace pk;
using cd = std::complex<double>;

TEST_CASE("coproduct is a homomorphism for the lattice product") {
	const double nu = 1.0;
	LatticeElement lx{{{1, -2, 0}, cd(1)}};
	LatticeElement ly{{{3, 1, 0}, cd(1)}};
	LatticeElement2 lhs = lattice_coproduct(lattice_mult(lx, ly, nu), nu);
	LatticeElement2 rhs = lattice_mult2(lattice_coproduct(lx, nu),
	                                    lattice_coproduct(ly, nu), nu);
	CHECK(lattice_residual2(lhs, rhs) <= 1e-12);
}

TEST_CASE("kappa is involutive and the dagger an involution on the lattice") {
	LatticeFunction f = lattice_random(2, 7u);
	LatticeElement fe = lattice_embed(f);
	CHECK(lattice_residual(lattice_kappa(lattice_kappa(fe)), fe) == 0.0);
	CHECK(lattice_residual(lattice_dagger(lattice_dagger(fe)), fe) == 0.0);
	CHECK(lattice_residual(lattice_mult(lattice_unit(), fe, 1.0), fe) <= 1e-15);
}

TEST_CASE("haar axioms hold on both algebras for random coefficient functions") {
	LatticeFunction f = lattice_random(2, 7u);
	LatticeFunction g = lattice_random(2, 8u);
	HaarResiduals r = haar_axiom_residuals(f, g, 1.0);
	CHECK(r.op_hwlia <= 1e-12);
	CHECK(r.op_hwsa <= 1e-12);
	CHECK(r.dual_hwsa_plain <= 1e-12);
	CHECK(r.dual_hwsa_phased <= 1e-12);
}

TEST_CASE("haar axioms: point mass is exact, nu-scaled phases still close") {
	LatticeFunction pm{{{1, -1}, cd(1)}};
	LatticeFunction g = lattice_random(1, 11u);
	HaarResiduals r = haar_axiom_residuals(pm, g, 1.0);
	CHECK(r.op_hwlia == 0.0);
	CHECK(r.op_hwsa <= 1e-14);
	HaarResiduals r2 = haar_axiom_residuals(lattice_random(2, 5u), g, 2.0);
	CHECK(r2.op_hwlia <= 1e-12);
	CHECK(r2.op_hwsa <= 1e-12);
	CHECK(r2.dual_hwsa_plain <= 1e-12);
	CHECK(r2.dual_hwsa_phased <= 1e-12);
}

TEST_CASE("yang-baxter closes exactly on even lattices") {
	CHECK(yang_baxter_residual(1) == 0.0);
	CHECK(yang_baxter_residual(2) == 0.0);
	CHECK(yang_baxter_residual(4) <= 1e-12);
	CHECK(yang_baxter_residual(8) <= 1e-12);
	CHECK(yang_baxter_residual(3) > 0.1); // odd lattices break the sign cocycle
	CHECK_THROWS_AS(yang_baxter_residual(0), std::invalid_argument);
	CHECK_THROWS_AS(yang_baxter_residual(17), std::invalid_argument);
}
