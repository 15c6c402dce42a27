#pragma once
// The plane 2-cocycle Omega, the base-point cochain Theta, and the plane
// action on the base point.  Same formulas serve exact rational and double
// contexts; the symbolic layer expands them into Poly.

#include "phasekit/rational.hpp"
#include "phasekit/symbols.hpp"

namespace pk {

template <class T> struct PlanePointT {
	T x1, x2;
};
using PlanePointQ = PlanePointT<Rational>;
using PlanePointD = PlanePointT<double>;

// Omega(x,y) = (x1 y2 - y1 x2)/2
template <class T> T omega(const PlanePointT<T> &x, const PlanePointT<T> &y) {
	return (x.x1 * y.x2 - y.x1 * x.x2) / T(2);
}

// Theta(q;x) = -(2q + x1) x2 / 2
template <class T> T theta(T q, const PlanePointT<T> &x) {
	return -(T(2) * q + x.x1) * x.x2 / T(2);
}

// y . q = q + y1
template <class T> T act(const PlanePointT<T> &y, T q) { return q + y.x1; }

// Theta(y.q; x) - Theta(q; x+y) + Theta(q; y); equals Omega(x,y) identically
template <class T>
T coboundary_theta(T q, const PlanePointT<T> &x, const PlanePointT<T> &y) {
	PlanePointT<T> xy{x.x1 + y.x1, x.x2 + y.x2};
	return theta(act(y, q), x) - theta(q, xy) + theta(q, y);
}

// Omega(y,z) - Omega(x+y,z) + Omega(x,y+z) - Omega(x,y); identically zero
template <class T>
T delta_omega(const PlanePointT<T> &x, const PlanePointT<T> &y, const PlanePointT<T> &z) {
	PlanePointT<T> xy{x.x1 + y.x1, x.x2 + y.x2};
	PlanePointT<T> yz{y.x1 + z.x1, y.x2 + z.x2};
	return omega(y, z) - omega(xy, z) + omega(x, yz) - omega(x, y);
}

// Symbolic Omega of two symbolic points, as an exact polynomial.
inline Poly omega_poly(const Arg2 &x, const Arg2 &y) {
	return half() * (Poly::mul_lin(x.c1, y.c2) - Poly::mul_lin(y.c1, x.c2));
}

} // namespace pk
