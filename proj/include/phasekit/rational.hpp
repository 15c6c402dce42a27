#pragma once
// Exact rational arithmetic on int64 with overflow-checked intermediates.
// Coefficients in phase exponents stay tiny (products of small integers and
// halves), so fixed-width numerators are sufficient; any overflow throws.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pk {

class Rational {
public:
	Rational() : num_(0), den_(1) {}
	Rational(std::int64_t n) : num_(n), den_(1) {}
	Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }
	bool is_zero() const { return num_ == 0; }

	friend Rational operator+(const Rational &a, const Rational &b) {
		return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
		               i128(a.den_) * b.den_);
	}
	friend Rational operator-(const Rational &a, const Rational &b) {
		return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
		               i128(a.den_) * b.den_);
	}
	friend Rational operator*(const Rational &a, const Rational &b) {
		return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
	}
	friend Rational operator/(const Rational &a, const Rational &b) {
		if (b.num_ == 0) throw std::domain_error("rational division by zero");
		return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
	}
	Rational operator-() const { return Rational(-num_, den_); }
	Rational &operator+=(const Rational &b) { return *this = *this + b; }
	Rational &operator-=(const Rational &b) { return *this = *this - b; }
	Rational &operator*=(const Rational &b) { return *this = *this * b; }

	friend bool operator==(const Rational &a, const Rational &b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
	friend bool operator<(const Rational &a, const Rational &b) {
		return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
	}

	double to_double() const { return double(num_) / double(den_); }

	std::string str() const {
		return den_ == 1 ? std::to_string(num_)
		                 : std::to_string(num_) + "/" + std::to_string(den_);
	}

private:
	using i128 = __int128;

	static Rational from128(i128 n, i128 d) {
		if (d == 0) throw std::domain_error("rational with zero denominator");
		if (d < 0) { n = -n; d = -d; }
		i128 g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) { n /= g; d /= g; }
		if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
			throw std::overflow_error("rational overflow");
		Rational r;
		r.num_ = std::int64_t(n);
		r.den_ = std::int64_t(d);
		return r;
	}
	static i128 gcd128(i128 a, i128 b) {
		while (b != 0) { i128 t = a % b; a = b; b = t; }
		return a == 0 ? 1 : a;
	}
	void normalize() {
		if (den_ == 0) throw std::domain_error("rational with zero denominator");
		if (den_ < 0) { num_ = -num_; den_ = -den_; }
		std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
		if (g > 1) { num_ /= g; den_ /= g; }
	}

	std::int64_t num_;
	std::int64_t den_;
};

inline Rational half() { return Rational(1, 2); }

} // namespace pk
