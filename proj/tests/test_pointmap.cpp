#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/pointmap.hpp"

using namespace pk;

TEST_CASE("composition is associative including phases and factors") {
	PointMap a = fundamental_map(FundMap::w_theta);
	PointMap b = fundamental_map(FundMap::w_omega_star);
	PointMap c = fundamental_map(FundMap::v_theta);
	PointMap m = mult_map(tens(dual_unit(), dual_fn(3)));
	CHECK(equal_maps(compose(compose(a, b), c), compose(a, compose(b, c))));
	CHECK(equal_maps(compose(compose(a, m), c), compose(a, compose(m, c))));
	CHECK(equal_maps(compose(compose(b, c), m), compose(b, compose(c, m))));
}

TEST_CASE("the coproduct generators are unitary as point maps") {
	for (auto [w, ws] : {std::pair{FundMap::w_theta, FundMap::w_theta_star},
	                     std::pair{FundMap::w_omega, FundMap::w_omega_star}}) {
		PointMap u = fundamental_map(w), us = fundamental_map(ws);
		CHECK(is_identity_map(compose(u, us)));
		CHECK(is_identity_map(compose(us, u)));
	}
}

TEST_CASE("antiunitary involutions square to the identity") {
	for (auto j : {FundMap::j_theta, FundMap::j_omega, FundMap::j_theta_mod}) {
		PointMap m = fundamental_map(j);
		CHECK(is_identity_map(compose(m, m)));
	}
}

TEST_CASE("conjugating the coproduct generator by the J pair gives its adjoint") {
	// (J_x (x) J_f) W (J_x (x) J_f) = W*, with the plane-reversal conjugation
	// dressing the leg the generator acts on
	PointMap jj = tensor2(fundamental_map(FundMap::j_theta), fundamental_map(FundMap::j_omega));
	PointMap w = fundamental_map(FundMap::w_theta);
	PointMap ws = fundamental_map(FundMap::w_theta_star);
	PointMap conj = compose(jj, compose(w, jj));
	CHECK(equal_maps(conj, ws));
	CHECK(conj.gen[1].has_value());
	CHECK(*conj.gen[1] == *ws.gen[1]);
}

TEST_CASE("multiplication operators compose like the star product") {
	AlgebraElement f = dual_fn(0), g = dual_fn(1);
	CHECK(equal_maps(compose(mult_map(f), mult_map(g)), mult_map(multiply(f, g))));
	// the unit multiplies trivially
	CHECK(is_identity_map(mult_map(dual_unit())));
}

TEST_CASE("conjugating a multiplication operator implements the coproduct") {
	// W (1 (x) f) W* acts as multiplication by the coproduct of f
	AlgebraElement f = dual_fn(0);
	PointMap w = fundamental_map(FundMap::w_theta);
	PointMap ws = fundamental_map(FundMap::w_theta_star);
	PointMap lhs = compose(w, compose(mult_map(tens(dual_unit(), f)), ws));
	PointMap rhs = mult_map(coproduct(f));
	CHECK(equal_maps(lhs, rhs));
}

TEST_CASE("three-leg embedding keeps the affine part and tags") {
	PointMap w = fundamental_map(FundMap::w_theta);
	PointMap w12 = embed3(w, 0, 1);
	PointMap w23 = embed3(w, 1, 2);
	PointMap w13 = embed3(w, 0, 2);
	// leg images
	CHECK(w12.img[2] == lin(2) + lin(0));
	CHECK(w23.img[4] == lin(4) + lin(2));
	CHECK(w13.img[4] == lin(4) + lin(0));
	// untouched legs stay put
	CHECK(w12.img[4] == lin(4));
	CHECK(w23.img[0] == lin(0));
	// generators follow the embedding
	CHECK(w13.gen[2].has_value());
	CHECK(!w13.gen[1].has_value());
}

TEST_CASE("pentagonal relation holds for both coproduct generators") {
	for (auto name : {FundMap::w_theta, FundMap::w_omega}) {
		PointMap w = fundamental_map(name);
		PointMap lhs = compose(embed3(w, 1, 2), compose(embed3(w, 0, 2), embed3(w, 0, 1)));
		PointMap rhs = compose(embed3(w, 0, 1), embed3(w, 1, 2));
		CHECK(equal_maps(lhs, rhs));
	}
}

TEST_CASE("phaseless generators satisfy the pentagon only projectively") {
	// V23 V13 V12 = e^{-i Omega(x,y)} V12 V23 resp. e^{-i Omega(y,z)}
	struct Row {
		FundMap name;
		Poly omega;
	};
	const Row rows[] = {{FundMap::v_theta, omega_poly(point(0), point(1))},
	                    {FundMap::v_omega, omega_poly(point(1), point(2))}};
	for (const auto &row : rows) {
		PointMap v = fundamental_map(row.name);
		PointMap lhs = compose(embed3(v, 1, 2), compose(embed3(v, 0, 2), embed3(v, 0, 1)));
		PointMap rhs = compose(embed3(v, 0, 1), embed3(v, 1, 2));
		rhs.phase = rhs.phase + PhaseExponent(-row.omega);
		CHECK(equal_maps(lhs, rhs));
	}
}

TEST_CASE("leg mismatches and malformed inputs are rejected") {
	CHECK_THROWS_AS(compose(fundamental_map(FundMap::w_theta), fundamental_map(FundMap::j_theta)),
	                std::invalid_argument);
	CHECK_THROWS_AS(embed3(fundamental_map(FundMap::j_theta), 0, 1), std::invalid_argument);
	CHECK_THROWS_AS(embed3(fundamental_map(FundMap::w_theta), 1, 1), std::invalid_argument);
	CHECK_THROWS_AS(mult_map(lgen(point(0))), std::invalid_argument);
	CHECK_THROWS_AS(tensor2(fundamental_map(FundMap::j_theta), fundamental_map(FundMap::w_theta)),
	                std::invalid_argument);
}
