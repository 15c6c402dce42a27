#pragma once
// Structured phase exponents: a list of Theta-terms plus a polynomial part.
// Theta-terms are kept structural because the conjugation rule and the
// base-point action act on the structure; expansion happens at comparison.
//
// There is one global base point q.  A Theta-term may carry a leg tag:
// such terms belong to a generator acting on that tensor leg and are
// re-based (q -> q - u1) when an operator with generator u acts on the
// same leg from the left ("feels the action").  Terms with leg -1 are
// plain scalar phases and are never re-based implicitly.

#include "phasekit/cocycle.hpp"
#include "phasekit/symbols.hpp"

#include <stdexcept>
#include <vector>

namespace pk {

constexpr int sym_q = sym_base0;

// coeff * Theta(q + shift ; (arg1, arg2))
struct ThetaTerm {
	Rational coeff;
	LinForm shift; // base offset, linear in plane coordinates
	Arg2 arg;
	int leg = -1;  // leg whose left action re-bases this term; -1 = none

	// -coeff*(q + shift + arg1/2)*arg2
	Poly expand() const {
		Poly p = Poly::mul_sym_lin(sym_q, arg.c2);
		p += Poly::mul_lin(shift, arg.c2);
		p += half() * Poly::mul_lin(arg.c1, arg.c2);
		return (-coeff) * p;
	}
};

struct PhaseExponent {
	std::vector<ThetaTerm> thetas;
	Poly poly;
	int nu_power = 0; // the whole exponent is scaled by nu^nu_power

	PhaseExponent() = default;
	explicit PhaseExponent(Poly p) : poly(std::move(p)) {}

	static PhaseExponent theta_phase(const Rational &c, const Arg2 &x, int leg = -1,
	                                 LinForm shift = {}) {
		PhaseExponent p;
		p.thetas.push_back({c, shift, x, leg});
		return p;
	}

	bool trivially_zero() const { return thetas.empty() && poly.is_zero(); }

	Poly expand() const {
		Poly p = poly;
		for (const auto &t : thetas) p += t.expand();
		return p;
	}

	PhaseExponent operator-() const {
		PhaseExponent r = *this;
		for (auto &t : r.thetas) t.coeff = -t.coeff;
		r.poly = -r.poly;
		return r;
	}
	friend PhaseExponent operator+(PhaseExponent a, const PhaseExponent &b) {
		bool az = a.thetas.empty() && a.poly.is_zero();
		bool bz = b.thetas.empty() && b.poly.is_zero();
		if (!az && !bz && a.nu_power != b.nu_power)
			throw std::logic_error("mixing phase exponents of different nu degree");
		if (az) a.nu_power = b.nu_power;
		a.thetas.insert(a.thetas.end(), b.thetas.begin(), b.thetas.end());
		a.poly += b.poly;
		return a;
	}
	friend PhaseExponent operator-(const PhaseExponent &a, const PhaseExponent &b) {
		return a + (-b);
	}

	// Scalar conjugation rule for the structured form: each Theta-term
	// (c, s, v) -> (c, -s, -v); the polynomial part is negated.
	PhaseExponent star() const {
		PhaseExponent r = *this;
		for (auto &t : r.thetas) {
			t.shift = -t.shift;
			t.arg = -t.arg;
		}
		r.poly = -r.poly;
		return r;
	}

	// Conjugation transported through an antiunitary point map: negate every
	// plane-coordinate symbol in the exponent.  On Theta-terms this agrees
	// with star(); on the polynomial part it flips only odd-degree
	// coordinate content (coordinate bilinears are carried by the map's own
	// argument reversal and are kept).
	PhaseExponent conj_coords() const {
		PhaseExponent r = *this;
		for (auto &t : r.thetas) {
			t.shift = -t.shift;
			t.arg = -t.arg;
		}
		r.poly = r.poly.negate_coords();
		return r;
	}

	// q -> q + delta on Theta-terms tagged with the given leg.
	void shift_leg(int leg, const LinForm &delta) {
		for (auto &t : thetas)
			if (t.leg == leg) t.shift = t.shift + delta;
	}

	// Substitute plane coordinates by linear forms (point-map transport).
	PhaseExponent substitute(const std::array<LinForm, n_coord> &img) const {
		auto sub = [&](const LinForm &l) {
			LinForm r;
			for (int i = 0; i < n_coord; ++i)
				if (!l.c[i].is_zero()) r = r + l.c[i] * img[i];
			return r;
		};
		PhaseExponent out = *this;
		for (auto &t : out.thetas) {
			t.shift = sub(t.shift);
			t.arg = {sub(t.arg.c1), sub(t.arg.c2)};
		}
		out.poly = poly.substitute(img);
		return out;
	}

	// Relabel leg tags (tensor-leg embedding); -1 entries pass through.
	PhaseExponent relabel_legs(const std::array<int, 3> &img) const {
		PhaseExponent out = *this;
		for (auto &t : out.thetas)
			if (t.leg >= 0) t.leg = img[t.leg];
		return out;
	}

	friend bool equal_expanded(const PhaseExponent &a, const PhaseExponent &b) {
		Poly pa = a.expand(), pb = b.expand();
		if (!(pa == pb)) return false;
		return pa.is_zero() || a.nu_power == b.nu_power;
	}
};

inline PhaseExponent omega_phase(const Arg2 &x, const Arg2 &y) {
	return PhaseExponent(omega_poly(x, y));
}

} // namespace pk
