#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/algebra.hpp"

#include <cmath>

using namespace pk;

namespace {

AlgebraElement lzero() { return lgen(Arg2{}); }

// single-term phase evaluated at concrete coordinates (x,y,z,q)
double phase_at(const AlgebraElement &e, std::size_t i, const std::array<double, n_sym> &v) {
	return e.terms[i].phase.expand().eval(v);
}

} // namespace

TEST_CASE("generator product carries the Omega phase") {
	AlgebraElement p = multiply(lgen(point(0)), lgen(point(1)));
	REQUIRE(p.terms.size() == 1);
	CHECK(p.terms[0].args[0] == point(0) + point(1));
	CHECK(p.terms[0].phase.expand() == omega_poly(point(0), point(1)));
	// unit: L(0) is neutral
	CHECK(equal_elements(multiply(lgen(point(0)), lzero()), lgen(point(0))));
	CHECK(equal_elements(multiply(lzero(), lgen(point(0))), lgen(point(0))));
}

TEST_CASE("operator product is associative") {
	AlgebraElement x = lgen(point(0)), y = lgen(point(1)), z = lgen(point(2));
	CHECK(equal_elements(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
}

TEST_CASE("projected elements multiply by the feels-the-action rule") {
	// e^{i Theta(q;-x)} L(x) . e^{i Theta(x^{-1}.q;-y)} L(y) = e^{i Theta(q;-x-y)} L(x+y)
	AlgebraElement a = project(H3Element{point(0), Poly::constant(Rational(3, 7))});
	AlgebraElement b = project(H3Element{point(1), Poly{}});
	AlgebraElement ab = project(H3Element{point(0) + point(1), Poly{}});
	CHECK(equal_elements(multiply(a, b), ab));
	// central content is dropped irrespective of its value
	AlgebraElement a2 = project(H3Element{point(0), Poly::linear_sym(sym_central0)});
	CHECK(equal_elements(a, a2));
}

TEST_CASE("projection intertwines the H3 layer") {
	H3Element g{point(0), Poly::linear_sym(sym_central0)};
	H3Element h{point(1), Poly::linear_sym(sym_central0 + 1)};
	CHECK(equal_elements(project(h3_multiply(g, h)),
	                     multiply(project(g), project(h))));
	// group law numerics: ((1,0),1)((0,1),1) has central exponent 1/2
	H3Element prod = h3_multiply(H3Element{point(0), Poly{}}, H3Element{point(1), Poly{}});
	std::array<double, n_sym> v{};
	v[0] = 1; v[3] = 1;
	CHECK(prod.alpha.eval(v) == doctest::Approx(0.5));
	// inverse element
	H3Element inv = h3_coinvolution(g);
	H3Element e = h3_multiply(g, inv);
	CHECK(e.x.is_zero());
	CHECK(e.alpha.is_zero());
}

TEST_CASE("dagger inverts generators and conjugates phases structurally") {
	AlgebraElement d = dagger(lgen(point(0)));
	CHECK(d.terms[0].args[0] == -point(0));
	CHECK(equal_elements(dagger(d), lgen(point(0))));
	AlgebraElement p = dagger(project(H3Element{point(0), Poly{}}));
	// (e^{i Theta(q;-x)} L(x))^dagger = e^{i Theta(q;x)} L(-x)
	CHECK(p.terms[0].args[0] == -point(0));
	CHECK(equal_expanded(p.terms[0].phase,
	                     PhaseExponent::theta_phase(Rational(1), point(0))));
	// L(x) L(x)^dagger = 1 (Omega(x,-x) = 0)
	CHECK(equal_elements(multiply(lgen(point(0)), dagger(lgen(point(0)))), lzero()));
}

TEST_CASE("commutator expands to the exact two-term difference") {
	AlgebraElement c = commutator(point(0), point(1));
	REQUIRE(c.terms.size() == 2);
	std::array<double, n_sym> v{};
	v[0] = 1; v[3] = 1; // x=(1,0), y=(0,1), Omega = 1/2
	double p0 = phase_at(c, 0, v), p1 = phase_at(c, 1, v);
	double im = c.terms[0].coeff.to_double() * std::sin(p0) +
	            c.terms[1].coeff.to_double() * std::sin(p1);
	CHECK(im == doctest::Approx(2 * std::sin(0.5)));
	// [L(x), L(x)] = 0
	CHECK(canonicalize(commutator(point(0), point(0))).terms.empty());
}

TEST_CASE("operator coproduct is a homomorphism and is coassociative") {
	AlgebraElement x = lgen(point(0)), y = lgen(point(1));
	CHECK(equal_elements(coproduct(multiply(x, y)),
	                     multiply(coproduct(x), coproduct(y))));
	// coassociativity on the phased expansion: apply Delta legwise via tens
	// of the one-leg pieces is exercised in the catalog; here the symmetric
	// form: both legs carry the same argument
	AlgebraElement d = coproduct(x);
	CHECK(d.terms[0].args[0] == d.terms[0].args[1]);
	CHECK(equal_expanded(d.terms[0].phase,
	                     PhaseExponent::theta_phase(Rational(1), -point(0), 0)));
}

TEST_CASE("operator coinvolution is involutive and anti-multiplicative") {
	AlgebraElement x = lgen(point(0));
	CHECK(equal_elements(coinvolution(coinvolution(x)), x));
	// kappa(L(x)L(y)) = kappa(L(y)) kappa(L(x)) up to e^{i(x1 y2 + y1 x2)}:
	// the plain anti-automorphism fails with exactly that witness
	AlgebraElement lhs = coinvolution(multiply(lgen(point(0)), lgen(point(1))));
	AlgebraElement rhs = multiply(coinvolution(lgen(point(1))), coinvolution(lgen(point(0))));
	Poly diff = lhs.terms[0].phase.expand() - rhs.terms[0].phase.expand();
	Poly witness = Poly::mul_lin(point(0).c1, point(1).c2) +
	               Poly::mul_lin(point(1).c1, point(0).c2);
	CHECK(diff == witness);
	// kappa commutes with dagger
	CHECK(equal_elements(coinvolution(dagger(x)), dagger(coinvolution(x))));
}

TEST_CASE("dual star product is abelian, associative and unital") {
	AlgebraElement f = dual_fn(0), g = dual_fn(1), h = dual_fn(2);
	CHECK(equal_elements(multiply(f, g), multiply(g, f)));
	CHECK(equal_elements(multiply(multiply(f, g), h), multiply(f, multiply(g, h))));
	CHECK(equal_elements(multiply(dual_unit(), f), f));
	CHECK(equal_elements(multiply(f, dual_unit()), f));
	CHECK(equal_elements(multiply(dual_unit(), dual_unit()), dual_unit()));
}

TEST_CASE("dual involution is an involutive anti-automorphism") {
	AlgebraElement f = dual_fn(0), g = dual_fn(1);
	CHECK(equal_elements(dual_involution(dual_unit()), dual_unit()));
	CHECK(equal_elements(dual_involution(dual_involution(f)), f));
	CHECK(equal_elements(dual_involution(multiply(f, g)),
	                     multiply(dual_involution(g), dual_involution(f))));
}

TEST_CASE("dual coproduct is unital and a star-homomorphism") {
	AlgebraElement f = dual_fn(0), g = dual_fn(1);
	CHECK(equal_elements(coproduct(dual_unit()), tens(dual_unit(), dual_unit())));
	CHECK(equal_elements(coproduct(multiply(f, g)),
	                     multiply(coproduct(f), coproduct(g))));
}

TEST_CASE("dual coinvolution squares to the identity") {
	AlgebraElement f = dual_fn(0);
	CHECK(equal_elements(coinvolution(coinvolution(f)), f));
	CHECK(equal_elements(coinvolution(dual_unit()), dual_unit()));
}

TEST_CASE("nu-scaled family reproduces the same structure") {
	AlgebraElement x = lgen(point(0), 1), y = lgen(point(1), 1);
	AlgebraElement p = multiply(x, y);
	CHECK(p.terms[0].phase.nu_power == 1);
	CHECK(equal_elements(coproduct(multiply(x, y)),
	                     multiply(coproduct(x), coproduct(y))));
	CHECK(equal_elements(coinvolution(coinvolution(x)), x));
}

TEST_CASE("side and degree mismatches are rejected") {
	CHECK_THROWS_AS(multiply(lgen(point(0)), dual_fn(0)), std::invalid_argument);
	CHECK_THROWS_AS(dagger(dual_fn(0)), std::invalid_argument);
	CHECK_THROWS_AS(dual_involution(lgen(point(0))), std::invalid_argument);
	CHECK_THROWS_AS(coproduct(coproduct(lgen(point(0)))), std::invalid_argument);
}
