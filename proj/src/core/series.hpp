#pragma once

#include "core/mpoly.hpp"

namespace ybgeo {

// Power series in hbar truncated at a fixed order N: sum_{m<=N} c_m h^m with
// MPoly coefficients. Mixing different truncation orders (or arities) is an
// error, never a silent coercion.
class HSeries {
  public:
	HSeries() : arity_(0), order_(0), c_(1, MPoly(0)) {}
	HSeries(int arity, int order)
	    : arity_(arity), order_(order), c_(order + 1, MPoly(arity))
	{
		require(order >= 0, "HSeries: negative truncation order");
	}
	static HSeries constant(int arity, int order, Coeff v);
	static HSeries of_poly(const MPoly &p, int order);
	static HSeries var(int arity, int order, int i);
	static HSeries hbar(int arity, int order); // h itself

	int arity() const { return arity_; }
	int order() const { return order_; }
	const MPoly &at(int m) const;
	MPoly &at(int m);
	bool is_zero() const;
	// smallest m with nonzero coefficient; order()+1 when zero
	int valuation() const;

	HSeries operator-() const;
	friend HSeries operator+(const HSeries &a, const HSeries &b);
	friend HSeries operator-(const HSeries &a, const HSeries &b);
	friend HSeries operator*(const HSeries &a, const HSeries &b);
	HSeries &operator+=(const HSeries &o) { return *this = *this + o; }
	HSeries &operator-=(const HSeries &o) { return *this = *this - o; }
	HSeries &operator*=(const HSeries &o) { return *this = *this * o; }
	HSeries scale(const Coeff &c) const;
	HSeries scale_poly(const MPoly &p) const;
	HSeries shift(int k) const; // multiply by h^k

	bool operator==(const HSeries &o) const;
	bool operator!=(const HSeries &o) const { return !(*this == o); }

	// multiplicative inverse; requires the h^0 coefficient to be a nonzero
	// rational constant (geometric series)
	HSeries inverse() const;
	// ln of a series with h^0 coefficient 1
	HSeries log1() const;
	// exp of a series with positive valuation
	HSeries exp_val() const;

	HSeries diff(int var) const;
	HSeries specialize_eps(const Rat &value) const;
	HSeries remap(int new_arity, const std::vector<int> &map) const;
	HSeries embed(int new_arity, int offset) const;

	// substitute series images for every variable of every coefficient
	HSeries subst(const std::vector<HSeries> &images) const;

	std::string to_string(int block_width = 0) const;

  private:
	int arity_;
	int order_;
	std::vector<MPoly> c_;
};

// p(images): substitution of a polynomial's variables by series
HSeries mpoly_subst(const MPoly &p, const std::vector<HSeries> &images);

void check_compatible(const HSeries &a, const HSeries &b);

} // namespace ybgeo
