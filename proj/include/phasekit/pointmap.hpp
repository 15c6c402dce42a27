#pragma once
// Affine point maps with phase on 1-3 copies of the plane, acting on
// functions as (U F)(p) = e^{i phase(p)} F(img(p)).  compose(g, f) is the
// operator product U_g U_f.  A map may carry a generator argument per leg:
// when g acts from the left, f's Theta-phases tagged with that leg are
// re-based by g's generator (q -> q - u1, "feels the action").  Antilinear
// maps conjugate everything to their right by coordinate negation.

#include "phasekit/algebra.hpp"

#include <optional>

namespace pk {

inline LinForm subst_lin(const LinForm &l, const std::array<LinForm, n_coord> &img) {
	LinForm r;
	for (int i = 0; i < n_coord; ++i)
		if (!l.c[i].is_zero()) r = r + l.c[i] * img[i];
	return r;
}

struct PointMap {
	int legs = 2;
	std::array<LinForm, n_coord> img{};
	PhaseExponent phase;
	bool antilinear = false;
	std::array<std::optional<Arg2>, 3> gen{};
	std::vector<FuncFactor> funcs;

	static PointMap identity(int legs) {
		PointMap m;
		m.legs = legs;
		for (int i = 0; i < n_coord; ++i) m.img[i] = lin(i);
		return m;
	}
};

inline PointMap compose(const PointMap &g, const PointMap &f) {
	if (g.legs != f.legs) throw std::invalid_argument("point-map leg count mismatch");
	PointMap r;
	r.legs = g.legs;
	for (int i = 0; i < n_coord; ++i) r.img[i] = subst_lin(f.img[i], g.img);
	PhaseExponent p = f.phase.substitute(g.img);
	if (g.antilinear) p = p.conj_coords();
	for (int l = 0; l < 3; ++l)
		if (g.gen[l]) p.shift_leg(l, -g.gen[l]->c1);
	r.phase = g.phase + p;
	r.funcs = g.funcs;
	for (auto ff : f.funcs) {
		ff.arg = {subst_lin(ff.arg.c1, g.img), subst_lin(ff.arg.c2, g.img)};
		if (g.antilinear) ff.conj = !ff.conj;
		r.funcs.push_back(ff);
	}
	std::sort(r.funcs.begin(), r.funcs.end());
	for (int l = 0; l < 3; ++l) {
		if (f.gen[l]) {
			Arg2 t{subst_lin(f.gen[l]->c1, g.img), subst_lin(f.gen[l]->c2, g.img)};
			if (g.antilinear) t = -t;
			r.gen[l] = g.gen[l] ? *g.gen[l] + t : t;
		} else {
			r.gen[l] = g.gen[l];
		}
	}
	r.antilinear = g.antilinear != f.antilinear;
	return r;
}

// Equality as operators: same affine part, accumulated phase (expanded),
// function factors and linearity type.  Generator bookkeeping is ignored.
inline bool equal_maps(const PointMap &a, const PointMap &b) {
	if (a.legs != b.legs || a.antilinear != b.antilinear) return false;
	for (int i = 0; i < 2 * a.legs; ++i)
		if (!(a.img[i] == b.img[i])) return false;
	auto fa = a.funcs, fb = b.funcs;
	std::sort(fa.begin(), fa.end());
	std::sort(fb.begin(), fb.end());
	if (!(fa == fb)) return false;
	return equal_expanded(a.phase, b.phase);
}

inline bool is_identity_map(const PointMap &m) {
	return equal_maps(m, PointMap::identity(m.legs));
}

enum class FundMap {
	w_theta,
	w_theta_star,
	w_omega,
	w_omega_star,
	v_theta,
	v_omega,
	j_theta,
	j_omega,
	j_theta_mod
};

inline PointMap fundamental_map(FundMap name) {
	const Arg2 x = point(0), y = point(1);
	PointMap m = PointMap::identity(2);
	switch (name) {
	case FundMap::w_theta:
		// F(x,y) -> e^{i Theta(q;x)} e^{-i Omega(x,y)} F(x, y+x)
		m.phase = PhaseExponent::theta_phase(Rational(1), x, 1) +
		          PhaseExponent(-omega_poly(x, y));
		m.img[2] = lin(2) + lin(0);
		m.img[3] = lin(3) + lin(1);
		m.gen[1] = -x;
		return m;
	case FundMap::w_theta_star:
		m.phase = PhaseExponent::theta_phase(Rational(1), -x, 1) +
		          PhaseExponent(omega_poly(x, y));
		m.img[2] = lin(2) - lin(0);
		m.img[3] = lin(3) - lin(1);
		m.gen[1] = x;
		return m;
	case FundMap::w_omega:
		// F(x,y) -> e^{i Omega(y,x)} e^{i Theta(q;-y)} F(x-y, y)
		m.phase = PhaseExponent::theta_phase(Rational(1), -y, 0) +
		          PhaseExponent(omega_poly(y, x));
		m.img[0] = lin(0) - lin(2);
		m.img[1] = lin(1) - lin(3);
		m.gen[0] = y;
		return m;
	case FundMap::w_omega_star:
		m.phase = PhaseExponent::theta_phase(Rational(1), y, 0) +
		          PhaseExponent(omega_poly(x, y));
		m.img[0] = lin(0) + lin(2);
		m.img[1] = lin(1) + lin(3);
		m.gen[0] = -y;
		return m;
	case FundMap::v_theta:
		m.phase = PhaseExponent(-omega_poly(x, y));
		m.img[2] = lin(2) + lin(0);
		m.img[3] = lin(3) + lin(1);
		m.gen[1] = -x;
		return m;
	case FundMap::v_omega:
		m.phase = PhaseExponent(-omega_poly(x, y));
		m.img[0] = lin(0) - lin(2);
		m.img[1] = lin(1) - lin(3);
		m.gen[0] = y;
		return m;
	case FundMap::j_theta:
		m = PointMap::identity(1);
		m.antilinear = true;
		return m;
	case FundMap::j_omega:
		m = PointMap::identity(1);
		m.img[0] = -lin(0);
		m.img[1] = -lin(1);
		m.antilinear = true;
		return m;
	case FundMap::j_theta_mod:
		// modular conjugation candidate: antilinear with the kappa phase
		m = PointMap::identity(1);
		m.antilinear = true;
		m.phase = PhaseExponent::theta_phase(Rational(-1), x) +
		          PhaseExponent::theta_phase(Rational(1), -x);
		return m;
	}
	throw std::invalid_argument("unknown fundamental map");
}

// Left-regular realization of a generator on one plane copy:
// (L(u) F)(p) = e^{i Omega(u,p)} F(p - u).  The generator slot makes
// leg-tagged phases on the right feel the action.
inline PointMap left_regular(const Arg2 &u) {
	PointMap m = PointMap::identity(1);
	m.phase = PhaseExponent(omega_poly(u, point(0)));
	m.img[0] = lin(0) - u.c1;
	m.img[1] = lin(1) - u.c2;
	m.gen[0] = u;
	return m;
}

// Tensor of two one-leg maps; a acts on leg 1, b on leg 2.  Requires both
// factors linear or both antilinear so the result is well defined.
inline PointMap tensor2(const PointMap &a, const PointMap &b) {
	if (a.legs != 1 || b.legs != 1) throw std::invalid_argument("tensor2 needs one-leg maps");
	if (a.antilinear != b.antilinear)
		throw std::invalid_argument("tensor2 factors must share linearity type");
	std::array<LinForm, n_coord> rel;
	for (int i = 0; i < n_coord; ++i) rel[i] = lin(i);
	rel[0] = lin(2);
	rel[1] = lin(3);
	PointMap r = PointMap::identity(2);
	r.antilinear = a.antilinear;
	r.img[0] = a.img[0];
	r.img[1] = a.img[1];
	r.img[2] = subst_lin(b.img[0], rel);
	r.img[3] = subst_lin(b.img[1], rel);
	r.phase = a.phase + b.phase.substitute(rel).relabel_legs({1, 1, 2});
	if (a.gen[0]) r.gen[0] = a.gen[0];
	if (b.gen[0]) r.gen[1] = Arg2{subst_lin(b.gen[0]->c1, rel), subst_lin(b.gen[0]->c2, rel)};
	r.funcs = a.funcs;
	for (auto ff : b.funcs) {
		ff.arg = {subst_lin(ff.arg.c1, rel), subst_lin(ff.arg.c2, rel)};
		r.funcs.push_back(ff);
	}
	std::sort(r.funcs.begin(), r.funcs.end());
	return r;
}

// Embed a two-leg map into three legs, acting on legs (la, lb), identity on
// the remaining leg.
inline PointMap embed3(const PointMap &m, int la, int lb) {
	if (m.legs != 2) throw std::invalid_argument("embed3 needs a two-leg map");
	if (la == lb || la < 0 || lb < 0 || la > 2 || lb > 2)
		throw std::invalid_argument("embed3 legs must be distinct in 0..2");
	std::array<LinForm, n_coord> rel;
	for (int i = 0; i < n_coord; ++i) rel[i] = lin(i);
	rel[0] = lin(2 * la);
	rel[1] = lin(2 * la + 1);
	rel[2] = lin(2 * lb);
	rel[3] = lin(2 * lb + 1);
	PointMap r = PointMap::identity(3);
	r.antilinear = m.antilinear;
	for (int c = 0; c < 2; ++c) {
		r.img[2 * la + c] = subst_lin(m.img[c], rel);
		r.img[2 * lb + c] = subst_lin(m.img[2 + c], rel);
	}
	r.phase = m.phase.substitute(rel).relabel_legs({la, lb, 2});
	if (m.gen[0]) r.gen[la] = Arg2{subst_lin(m.gen[0]->c1, rel), subst_lin(m.gen[0]->c2, rel)};
	if (m.gen[1]) r.gen[lb] = Arg2{subst_lin(m.gen[1]->c1, rel), subst_lin(m.gen[1]->c2, rel)};
	r.funcs = m.funcs;
	for (auto &ff : r.funcs)
		ff.arg = {subst_lin(ff.arg.c1, rel), subst_lin(ff.arg.c2, rel)};
	return r;
}

// Left star-multiplication operator by a single-term dual element: identity
// map carrying the element's phase, its function factors, and the structural
// star phases of the dual product (one Theta-term per leg, based with the
// legwise rule).
inline PointMap mult_map(const AlgebraElement &h) {
	if (h.side != Side::dual) throw std::invalid_argument("mult_map needs a dual element");
	if (h.terms.size() != 1 || !(h.terms[0].coeff == Rational(1)))
		throw std::invalid_argument("mult_map needs a single unit-coefficient term");
	PointMap m = PointMap::identity(h.degree);
	PhaseExponent st;
	st.nu_power = h.nu;
	for (int l = 0; l < h.degree; ++l) {
		LinForm shift;
		for (int mm = l + 1; mm < h.degree; ++mm) shift = shift + point(mm).c1;
		st.thetas.push_back({Rational(1), shift, point(l), -1});
	}
	m.phase = h.terms[0].phase + st;
	m.funcs = h.terms[0].funcs;
	return m;
}

} // namespace pk
