#pragma once
// Symbol table and exact linear/quadratic forms for phase exponents.
//
// Symbols: six plane coordinates (three symbolic points, two components
// each), three base-point symbols (one per tensor leg), and two central
// symbols for unimodular central factors.  Phase exponents expand to
// polynomials of total degree <= 2, degree <= 1 in each base symbol.

#include "phasekit/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pk {

constexpr int n_coord = 6;            // x1 x2 y1 y2 z1 z2
constexpr int sym_base0 = 6;          // q1 q2 q3
constexpr int n_base = 3;
constexpr int sym_central0 = 9;       // t1 t2
constexpr int n_sym = 11;
constexpr int sym_one = -1;           // marker for the constant slot

inline int coord_sym(int point, int axis) { return 2 * point + axis; } // axis 0/1
inline bool is_coord(int s) { return s >= 0 && s < n_coord; }

inline std::string sym_name(int s) {
	static const char *names[n_sym] = {"x1", "x2", "y1", "y2", "z1", "z2",
	                                   "q1", "q2", "q3", "t1", "t2"};
	return s == sym_one ? "1" : names[s];
}

// Homogeneous linear form in the six plane coordinates.
struct LinForm {
	std::array<Rational, n_coord> c{};

	bool is_zero() const {
		for (const auto &v : c)
			if (!v.is_zero()) return false;
		return true;
	}
	LinForm operator-() const {
		LinForm r;
		for (int i = 0; i < n_coord; ++i) r.c[i] = -c[i];
		return r;
	}
	friend LinForm operator+(const LinForm &a, const LinForm &b) {
		LinForm r;
		for (int i = 0; i < n_coord; ++i) r.c[i] = a.c[i] + b.c[i];
		return r;
	}
	friend LinForm operator-(const LinForm &a, const LinForm &b) { return a + (-b); }
	friend LinForm operator*(const Rational &s, const LinForm &a) {
		LinForm r;
		for (int i = 0; i < n_coord; ++i) r.c[i] = s * a.c[i];
		return r;
	}
	friend bool operator==(const LinForm &a, const LinForm &b) { return a.c == b.c; }
	friend bool operator<(const LinForm &a, const LinForm &b) {
		for (int i = 0; i < n_coord; ++i) {
			if (a.c[i] < b.c[i]) return true;
			if (b.c[i] < a.c[i]) return false;
		}
		return false;
	}
	double eval(const std::array<double, n_coord> &v) const {
		double s = 0;
		for (int i = 0; i < n_coord; ++i) s += c[i].to_double() * v[i];
		return s;
	}
};

inline LinForm lin(int sym) {
	LinForm r;
	r.c[sym] = Rational(1);
	return r;
}

// A symbolic plane point: pair of linear forms (first, second component).
struct Arg2 {
	LinForm c1, c2;

	Arg2 operator-() const { return {-c1, -c2}; }
	friend Arg2 operator+(const Arg2 &a, const Arg2 &b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
	friend Arg2 operator-(const Arg2 &a, const Arg2 &b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
	friend bool operator==(const Arg2 &a, const Arg2 &b) { return a.c1 == b.c1 && a.c2 == b.c2; }
	friend bool operator<(const Arg2 &a, const Arg2 &b) {
		if (a.c1 < b.c1) return true;
		if (b.c1 < a.c1) return false;
		return a.c2 < b.c2;
	}
	bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
};

inline Arg2 point(int p) { return {lin(coord_sym(p, 0)), lin(coord_sym(p, 1))}; }

// Sparse polynomial of total degree <= 2 over the full symbol set.
// Monomial key (i,j) with i <= j; sym_one fills unused slots.
class Poly {
public:
	Poly() = default;

	static Poly constant(const Rational &r) {
		Poly p;
		p.add(sym_one, sym_one, r);
		return p;
	}
	static Poly from_lin(const LinForm &l) {
		Poly p;
		for (int i = 0; i < n_coord; ++i)
			if (!l.c[i].is_zero()) p.add(sym_one, i, l.c[i]);
		return p;
	}
	static Poly mul_lin(const LinForm &a, const LinForm &b) {
		Poly p;
		for (int i = 0; i < n_coord; ++i)
			for (int j = 0; j < n_coord; ++j) {
				Rational c = a.c[i] * b.c[j];
				if (!c.is_zero()) p.add(i, j, c);
			}
		return p;
	}
	static Poly mul_sym_lin(int sym, const LinForm &l) {
		Poly p;
		for (int i = 0; i < n_coord; ++i)
			if (!l.c[i].is_zero()) p.add(sym, i, l.c[i]);
		return p;
	}
	static Poly linear_sym(int sym) {
		Poly p;
		p.add(sym_one, sym, Rational(1));
		return p;
	}

	void add(int i, int j, const Rational &c) {
		if (i > j) std::swap(i, j);
		auto key = std::make_pair(i, j);
		auto it = terms_.find(key);
		if (it == terms_.end()) {
			if (!c.is_zero()) terms_.emplace(key, c);
			return;
		}
		it->second += c;
		if (it->second.is_zero()) terms_.erase(it);
	}

	Poly &operator+=(const Poly &o) {
		for (const auto &[k, v] : o.terms_) add(k.first, k.second, v);
		return *this;
	}
	Poly &operator-=(const Poly &o) {
		for (const auto &[k, v] : o.terms_) add(k.first, k.second, -v);
		return *this;
	}
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	Poly operator-() const {
		Poly p;
		for (const auto &[k, v] : terms_) p.terms_.emplace(k, -v);
		return p;
	}
	friend Poly operator*(const Rational &s, const Poly &p) {
		Poly r;
		if (s.is_zero()) return r;
		for (const auto &[k, v] : p.terms_) r.terms_.emplace(k, s * v);
		return r;
	}
	friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }
	friend bool operator<(const Poly &a, const Poly &b) { return a.terms_ < b.terms_; }

	bool is_zero() const { return terms_.empty(); }

	// Negate every plane-coordinate symbol (base and central symbols kept).
	Poly negate_coords() const {
		Poly p;
		for (const auto &[k, v] : terms_) {
			int parity = (is_coord(k.first) ? 1 : 0) + (is_coord(k.second) ? 1 : 0);
			p.terms_.emplace(k, parity % 2 ? -v : v);
		}
		return p;
	}

	// Substitute each plane coordinate by the given linear form.
	Poly substitute(const std::array<LinForm, n_coord> &img) const {
		Poly out;
		for (const auto &[k, v] : terms_) {
			auto [i, j] = k;
			bool ci = is_coord(i), cj = is_coord(j);
			if (!ci && !cj) {
				out.add(i, j, v);
			} else if (ci && cj) {
				out += v * mul_lin(img[i], img[j]);
			} else {
				int s = ci ? j : i;
				const LinForm &l = ci ? img[i] : img[j];
				if (s == sym_one)
					out += v * from_lin(l);
				else
					out += v * mul_sym_lin(s, l);
			}
		}
		return out;
	}

	double eval(const std::array<double, n_sym> &v) const {
		double s = 0;
		for (const auto &[k, c] : terms_) {
			double m = c.to_double();
			if (k.first != sym_one) m *= v[k.first];
			if (k.second != sym_one) m *= v[k.second];
			s += m;
		}
		return s;
	}

	std::string str() const {
		if (terms_.empty()) return "0";
		std::string s;
		for (const auto &[k, v] : terms_) {
			if (!s.empty()) s += " + ";
			s += v.str();
			if (k.first != sym_one) s += "*" + sym_name(k.first);
			if (k.second != sym_one) s += "*" + sym_name(k.second);
		}
		return s;
	}

	const std::map<std::pair<int, int>, Rational> &terms() const { return terms_; }

private:
	std::map<std::pair<int, int>, Rational> terms_;
};

} // namespace pk
