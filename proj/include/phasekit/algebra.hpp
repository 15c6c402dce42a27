#pragma once
// Formal elements of the twisted operator algebra and its function-side
// dual: rational-coefficient sums of phase * generator terms (operator
// side) or phase * function-factor terms (dual side), tensor degree 1-3.
//
// Product rules:
//  - operator side: L(x)L(y) = e^{i Omega(x,y)} L(x+y); the right factor's
//    leg-l Theta-phases feel the left factor's leg-l generator
//    (q_l -> q_l - u1).
//  - dual side: (f*g)(x) = e^{i Theta(q;x)} f(x) g(x) legwise; in a
//    degree-2 element every leg-1 Theta-phase is based at the point
//    (leg-2 argument).q, which is what makes the unit and homomorphism
//    identities close.

#include "phasekit/phase.hpp"

#include <algorithm>
#include <stdexcept>

namespace pk {

enum class Side { op, dual };

struct FuncFactor {
	int fid;  // abstract function symbol id
	Arg2 arg;
	bool conj = false;

	friend bool operator<(const FuncFactor &a, const FuncFactor &b) {
		if (a.fid != b.fid) return a.fid < b.fid;
		if (a.conj != b.conj) return a.conj < b.conj;
		return a.arg < b.arg;
	}
	friend bool operator==(const FuncFactor &a, const FuncFactor &b) {
		return a.fid == b.fid && a.conj == b.conj && a.arg == b.arg;
	}
};

struct AlgTerm {
	Rational coeff = Rational(1);
	PhaseExponent phase;
	std::vector<Arg2> args;        // operator side: generator argument per leg
	std::vector<FuncFactor> funcs; // dual side: function factors
};

struct AlgebraElement {
	Side side = Side::op;
	int degree = 1;
	int nu = 0; // 1 for the nu-scaled family; structural phases carry nu_power=nu
	std::vector<AlgTerm> terms;
};

inline PhaseExponent with_nu(PhaseExponent p, int nu) {
	p.nu_power = nu;
	return p;
}

// L(x) resp. its nu-scaled generator.
inline AlgebraElement lgen(const Arg2 &x, int nu = 0) {
	AlgebraElement e;
	e.nu = nu;
	AlgTerm t;
	t.phase.nu_power = nu;
	t.args = {x};
	e.terms.push_back(t);
	return e;
}

inline AlgebraElement scale_phase(AlgebraElement e, const PhaseExponent &p) {
	for (auto &t : e.terms) t.phase = t.phase + p;
	return e;
}

// Dual element: single abstract function factor f(x) on one leg.
inline AlgebraElement dual_fn(int fid, int nu = 0) {
	AlgebraElement e;
	e.side = Side::dual;
	e.nu = nu;
	AlgTerm t;
	t.phase.nu_power = nu;
	t.funcs = {{fid, point(0), false}};
	e.terms.push_back(t);
	return e;
}

// Dual unit: 1(x) = e^{-i Theta(q;x)}.
inline AlgebraElement dual_unit(int nu = 0) {
	AlgebraElement e;
	e.side = Side::dual;
	e.nu = nu;
	AlgTerm t;
	t.phase = with_nu(PhaseExponent::theta_phase(Rational(-1), point(0)), nu);
	e.terms.push_back(t);
	return e;
}

inline void check_compatible(const AlgebraElement &a, const AlgebraElement &b) {
	if (a.side != b.side) throw std::invalid_argument("algebra side mismatch");
	if (a.degree != b.degree) throw std::invalid_argument("tensor degree mismatch");
}

inline AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b) {
	check_compatible(a, b);
	AlgebraElement out;
	out.side = a.side;
	out.degree = a.degree;
	out.nu = a.nu;
	for (const auto &ta : a.terms)
		for (const auto &tb : b.terms) {
			AlgTerm t;
			t.coeff = ta.coeff * tb.coeff;
			if (a.side == Side::op) {
				PhaseExponent pb = tb.phase;
				PhaseExponent om;
				om.nu_power = a.nu;
				for (int l = 0; l < a.degree; ++l) {
					pb.shift_leg(l, -ta.args[l].c1);
					om.poly += omega_poly(ta.args[l], tb.args[l]);
				}
				t.phase = ta.phase + pb + om;
				for (int l = 0; l < a.degree; ++l)
					t.args.push_back(ta.args[l] + tb.args[l]);
			} else {
				PhaseExponent st;
				st.nu_power = a.nu;
				for (int l = 0; l < a.degree; ++l) {
					LinForm shift;
					for (int m = l + 1; m < a.degree; ++m) shift = shift + point(m).c1;
					st.thetas.push_back({Rational(1), shift, point(l), -1});
				}
				t.phase = ta.phase + tb.phase + st;
				t.funcs = ta.funcs;
				t.funcs.insert(t.funcs.end(), tb.funcs.begin(), tb.funcs.end());
				std::sort(t.funcs.begin(), t.funcs.end());
			}
			out.terms.push_back(t);
		}
	return out;
}

inline AlgebraElement dagger(const AlgebraElement &a) {
	if (a.side != Side::op) throw std::invalid_argument("dagger is operator-side; use dual_involution");
	AlgebraElement out = a;
	for (auto &t : out.terms) {
		t.phase = t.phase.star();
		for (auto &x : t.args) x = -x;
	}
	return out;
}

// Operator side: Delta L(x) = e^{i Theta(q1;-x)} L(x)(x)L(x); the existing
// scalar phase passes through.  Dual side: Delta f(x,y) = e^{-i Omega(x,y)}
// f(x+y) (plane coordinates of leg 1 replaced by the two-leg sum).
inline AlgebraElement coproduct(const AlgebraElement &a) {
	if (a.degree != 1) throw std::invalid_argument("coproduct needs tensor degree 1");
	AlgebraElement out;
	out.side = a.side;
	out.degree = 2;
	out.nu = a.nu;
	for (const auto &ta : a.terms) {
		AlgTerm t = ta;
		if (a.side == Side::op) {
			t.phase = ta.phase +
			          with_nu(PhaseExponent::theta_phase(Rational(1), -ta.args[0], 0), a.nu);
			t.args = {ta.args[0], ta.args[0]};
		} else {
			std::array<LinForm, n_coord> img;
			for (int i = 0; i < n_coord; ++i) img[i] = lin(i);
			img[0] = lin(0) + lin(2);
			img[1] = lin(1) + lin(3);
			t.phase = ta.phase.substitute(img);
			t.phase = t.phase + with_nu(PhaseExponent(-omega_poly(point(0), point(1))), a.nu);
			for (auto &f : t.funcs) {
				auto sub = [&](const LinForm &l) {
					LinForm r;
					for (int i = 0; i < n_coord; ++i)
						if (!l.c[i].is_zero()) r = r + l.c[i] * img[i];
					return r;
				};
				f.arg = {sub(f.arg.c1), sub(f.arg.c2)};
			}
		}
		out.terms.push_back(t);
	}
	return out;
}

// kappa(L(x)) = e^{i[Theta(q;x)-Theta(q;-x)]} L(-x); passes scalar phases.
// Dual: kappa f(x) = e^{-i[Theta(q;x)-Theta(q;-x)]} f(-x).
inline AlgebraElement coinvolution(const AlgebraElement &a) {
	if (a.degree != 1) throw std::invalid_argument("coinvolution needs tensor degree 1");
	AlgebraElement out = a;
	for (auto &t : out.terms) {
		if (a.side == Side::op) {
			PhaseExponent k = PhaseExponent::theta_phase(Rational(1), t.args[0], 0) +
			                  PhaseExponent::theta_phase(Rational(-1), -t.args[0], 0);
			t.phase = t.phase + with_nu(k, a.nu);
			t.args[0] = -t.args[0];
		} else {
			std::array<LinForm, n_coord> img;
			for (int i = 0; i < n_coord; ++i) img[i] = lin(i);
			img[0] = -lin(0);
			img[1] = -lin(1);
			t.phase = t.phase.substitute(img);
			for (auto &f : t.funcs) f.arg = {-f.arg.c1, -f.arg.c2};
			PhaseExponent k = PhaseExponent::theta_phase(Rational(-1), point(0)) +
			                  PhaseExponent::theta_phase(Rational(1), -point(0));
			t.phase = t.phase + with_nu(k, a.nu);
		}
	}
	return out;
}

// f^o(x) = e^{-i[Theta(q;x)-Theta(q;-x)]} conj f(x); antilinear, so existing
// scalar phases conjugate by the structural star rule.
inline AlgebraElement dual_involution(const AlgebraElement &a) {
	if (a.side != Side::dual) throw std::invalid_argument("dual_involution is dual-side; use dagger");
	AlgebraElement out = a;
	for (auto &t : out.terms) {
		t.phase = t.phase.star();
		PhaseExponent k = PhaseExponent::theta_phase(Rational(-1), point(0)) +
		                  PhaseExponent::theta_phase(Rational(1), -point(0));
		t.phase = t.phase + with_nu(k, a.nu);
		for (auto &f : t.funcs) f.conj = !f.conj;
	}
	return out;
}

// Legwise coinvolution on a degree-2 element.  Operator side: each leg
// contributes its kappa phase at the common base.  Dual side: leg-1 phases
// are based at the point shifted by the post-involution leg-2 argument.
inline AlgebraElement coinvolution_legwise2(const AlgebraElement &a) {
	if (a.degree != 2) throw std::invalid_argument("legwise coinvolution needs degree 2");
	AlgebraElement out = a;
	for (auto &t : out.terms) {
		if (a.side == Side::op) {
			for (int l = 0; l < 2; ++l) {
				PhaseExponent k = PhaseExponent::theta_phase(Rational(1), t.args[l], l) +
				                  PhaseExponent::theta_phase(Rational(-1), -t.args[l], l);
				t.phase = t.phase + with_nu(k, a.nu);
				t.args[l] = -t.args[l];
			}
		} else {
			std::array<LinForm, n_coord> img;
			for (int i = 0; i < n_coord; ++i) img[i] = lin(i);
			for (int i = 0; i < 4; ++i) img[i] = -lin(i);
			t.phase = t.phase.substitute(img);
			for (auto &f : t.funcs) f.arg = {-f.arg.c1, -f.arg.c2};
			PhaseExponent k1;
			LinForm s = -point(1).c1; // post-involution leg-2 argument
			k1.thetas.push_back({Rational(-1), s, point(0), -1});
			k1.thetas.push_back({Rational(1), s, -point(0), -1});
			PhaseExponent k2 = PhaseExponent::theta_phase(Rational(-1), point(1)) +
			                   PhaseExponent::theta_phase(Rational(1), -point(1));
			t.phase = t.phase + with_nu(k1 + k2, a.nu);
		}
	}
	return out;
}

// Leg swap sigma on a degree-2 element.
inline AlgebraElement sigma2(const AlgebraElement &a) {
	if (a.degree != 2) throw std::invalid_argument("sigma needs degree 2");
	AlgebraElement out = a;
	std::array<LinForm, n_coord> img;
	for (int i = 0; i < n_coord; ++i) img[i] = lin(i);
	std::swap(img[0], img[2]);
	std::swap(img[1], img[3]);
	for (auto &t : out.terms) {
		if (!t.args.empty()) std::swap(t.args[0], t.args[1]);
		if (a.side == Side::dual) {
			t.phase = t.phase.substitute(img);
			auto sub = [&](const LinForm &l) {
				LinForm r;
				for (int i = 0; i < n_coord; ++i)
					if (!l.c[i].is_zero()) r = r + l.c[i] * img[i];
				return r;
			};
			for (auto &f : t.funcs) f.arg = {sub(f.arg.c1), sub(f.arg.c2)};
		}
	}
	return out;
}

// Tensor product of two degree-1 elements.  The second factor's plane
// coordinates move to leg 2; on the dual side the first factor's
// Theta-phases get based at (leg-2 argument).q.
inline AlgebraElement tens(const AlgebraElement &a, const AlgebraElement &b) {
	if (a.degree != 1 || b.degree != 1) throw std::invalid_argument("tens needs degree-1 factors");
	if (a.side != b.side) throw std::invalid_argument("algebra side mismatch");
	std::array<LinForm, n_coord> img;
	for (int i = 0; i < n_coord; ++i) img[i] = lin(i);
	img[0] = lin(2);
	img[1] = lin(3);
	AlgebraElement out;
	out.side = a.side;
	out.degree = 2;
	out.nu = a.nu;
	for (const auto &ta : a.terms)
		for (const auto &tb : b.terms) {
			AlgTerm t;
			t.coeff = ta.coeff * tb.coeff;
			PhaseExponent pb = tb.phase.substitute(img);
			PhaseExponent pa = ta.phase;
			if (a.side == Side::dual)
				pa.shift_leg(-1, point(1).c1);
			t.phase = pa + pb;
			if (a.side == Side::op) {
				t.args = {ta.args[0], tb.args[0]};
			} else {
				t.funcs = ta.funcs;
				for (auto f : tb.funcs) {
					auto sub = [&](const LinForm &l) {
						LinForm r;
						for (int i = 0; i < n_coord; ++i)
							if (!l.c[i].is_zero()) r = r + l.c[i] * img[i];
						return r;
					};
					f.arg = {sub(f.arg.c1), sub(f.arg.c2)};
					t.funcs.push_back(f);
				}
				std::sort(t.funcs.begin(), t.funcs.end());
			}
			out.terms.push_back(t);
		}
	return out;
}

// Commutator [L(x), L(y)] as the exact two-term difference.
inline AlgebraElement commutator(const Arg2 &x, const Arg2 &y, int nu = 0) {
	AlgebraElement lx = lgen(x, nu), ly = lgen(y, nu);
	AlgebraElement ab = multiply(lx, ly), ba = multiply(ly, lx);
	for (auto &t : ba.terms) t.coeff = -t.coeff;
	AlgebraElement out = ab;
	out.terms.insert(out.terms.end(), ba.terms.begin(), ba.terms.end());
	return out;
}

// Combine terms with identical expanded phase, arguments and factors.
inline AlgebraElement canonicalize(const AlgebraElement &a) {
	struct Key {
		std::vector<Arg2> args;
		Poly phase;
		int nu_power;
		std::vector<FuncFactor> funcs;
		bool operator<(const Key &r) const {
			const Key &l = *this;
			if (l.args < r.args) return true;
			if (r.args < l.args) return false;
			if (l.phase < r.phase) return true;
			if (r.phase < l.phase) return false;
			if (l.nu_power != r.nu_power) return l.nu_power < r.nu_power;
			return l.funcs < r.funcs;
		}
	};
	std::map<Key, Rational> acc;
	for (const auto &t : a.terms) {
		Poly p = t.phase.expand();
		Key k{t.args, p, p.is_zero() ? 0 : t.phase.nu_power, t.funcs};
		auto it = acc.find(k);
		if (it == acc.end())
			acc.emplace(std::move(k), t.coeff);
		else {
			it->second += t.coeff;
			if (it->second.is_zero()) acc.erase(it);
		}
	}
	AlgebraElement out;
	out.side = a.side;
	out.degree = a.degree;
	out.nu = a.nu;
	for (const auto &[k, c] : acc) {
		AlgTerm t;
		t.coeff = c;
		t.phase = PhaseExponent(k.phase);
		t.phase.nu_power = k.nu_power;
		t.args = k.args;
		t.funcs = k.funcs;
		out.terms.push_back(t);
	}
	return out;
}

inline bool equal_elements(const AlgebraElement &a, const AlgebraElement &b) {
	if (a.side != b.side || a.degree != b.degree) return false;
	AlgebraElement d = a;
	for (auto t : b.terms) {
		t.coeff = -t.coeff;
		d.terms.push_back(t);
	}
	return canonicalize(d).terms.empty();
}

// ---- Heisenberg-type reference layer ----
// (x, alpha)(y, beta) = (x+y, alpha beta e^{i Omega(x,y)}), exponent form.
struct H3Element {
	Arg2 x;
	Poly alpha; // exponent of the unimodular central factor
};

inline H3Element h3_multiply(const H3Element &a, const H3Element &b) {
	return {a.x + b.x, a.alpha + b.alpha + omega_poly(a.x, b.x)};
}

inline std::pair<H3Element, H3Element> h3_coproduct(const H3Element &a) {
	return {a, a};
}

inline H3Element h3_coinvolution(const H3Element &a) {
	return {-a.x, -a.alpha}; // the group inverse; Omega(x,-x)=0
}

// Projection: L(x,alpha) -> e^{i Theta(q;-x)} L(x); central content dropped.
inline AlgebraElement project(const H3Element &h, int nu = 0) {
	return scale_phase(lgen(h.x, nu),
	                   with_nu(PhaseExponent::theta_phase(Rational(1), -h.x, 0), nu));
}

// Dual projection: f(x, alpha) -> e^{-i Theta(q;-x)} f(x).
inline AlgebraElement project_dual_fn(int fid, int nu = 0) {
	return scale_phase(dual_fn(fid, nu),
	                   with_nu(PhaseExponent::theta_phase(Rational(-1), -point(0)), nu));
}

} // namespace pk
