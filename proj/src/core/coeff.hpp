#pragma once

#include "core/error.hpp"
#include <gmpxx.h>
#include <string>
#include <vector>

namespace ybgeo {

using Rat = mpq_class;

std::string rat_to_string(const Rat &r);

// Element of Q[eps]: dense coefficient list, c[k] = coefficient of eps^k,
// trailing zeros trimmed (zero = empty list). Rationals are kept canonical
// (lowest terms, positive denominator) by GMP.
class Coeff {
  public:
	Coeff() = default;
	Coeff(const Rat &r);
	Coeff(long n);
	Coeff(long num, long den);
	static Coeff eps(); // the generator

	bool is_zero() const { return c_.empty(); }
	bool is_rational() const { return c_.size() <= 1; }
	bool is_one() const;
	int eps_degree() const { return (int)c_.size() - 1; } // -1 for zero
	const Rat &rat() const;                               // requires is_rational
	const Rat &at(int k) const;

	Coeff operator-() const;
	Coeff &operator+=(const Coeff &o);
	Coeff &operator-=(const Coeff &o);
	Coeff &operator*=(const Coeff &o);
	friend Coeff operator+(Coeff a, const Coeff &b) { return a += b; }
	friend Coeff operator-(Coeff a, const Coeff &b) { return a -= b; }
	friend Coeff operator*(const Coeff &a, const Coeff &b);
	// division by a nonzero rational only; eps stays polynomial
	Coeff div_rational(const Rat &r) const;

	bool operator==(const Coeff &o) const { return c_ == o.c_; }
	bool operator!=(const Coeff &o) const { return !(*this == o); }
	// total order, used for canonical term ordering
	int cmp(const Coeff &o) const;

	Coeff specialize_eps(const Rat &value) const;

	std::string to_string() const;

  private:
	void trim();
	std::vector<Rat> c_;

	friend class CoeffFrac;
	friend Coeff poly_divexact(const Coeff &, const Coeff &);
	friend Coeff poly_gcd(const Coeff &, const Coeff &);
};

// exact univariate division in Q[eps]; fails if remainder is nonzero
Coeff poly_divexact(const Coeff &a, const Coeff &b);
// monic gcd in Q[eps] (gcd(0,0) = 0)
Coeff poly_gcd(const Coeff &a, const Coeff &b);

// Fraction field Q(eps), used internally for exact linear algebra. Public
// structures store plain Coeff; conversions that would need a genuine eps
// denominator are rejected.
class CoeffFrac {
  public:
	CoeffFrac() = default;
	CoeffFrac(Coeff n) : num_(std::move(n)), den_(Coeff(1)) {}
	CoeffFrac(Coeff n, Coeff d);
	static CoeffFrac of(long n) { return CoeffFrac(Coeff(n)); }

	bool is_zero() const { return num_.is_zero(); }
	const Coeff &num() const { return num_; }
	const Coeff &den() const { return den_; }

	CoeffFrac operator-() const;
	friend CoeffFrac operator+(const CoeffFrac &a, const CoeffFrac &b);
	friend CoeffFrac operator-(const CoeffFrac &a, const CoeffFrac &b);
	friend CoeffFrac operator*(const CoeffFrac &a, const CoeffFrac &b);
	friend CoeffFrac operator/(const CoeffFrac &a, const CoeffFrac &b);
	bool operator==(const CoeffFrac &o) const;

	// exact conversion back to Q[eps]; fails if denominator is not rational
	Coeff to_coeff() const;

  private:
	void normalize();
	Coeff num_, den_{Coeff(1)};
};

} // namespace ybgeo
