#include "core/coeff.hpp"

#include <sstream>

namespace ybgeo {

std::string rat_to_string(const Rat &r)
{
	std::ostringstream os;
	os << r;
	return os.str();
}

Coeff::Coeff(const Rat &r)
{
	if (r != 0)
		c_.push_back(r);
}

Coeff::Coeff(long n)
{
	if (n != 0)
		c_.emplace_back(n);
}

Coeff::Coeff(long num, long den)
{
	Rat r(num, den);
	r.canonicalize();
	if (r != 0)
		c_.push_back(r);
}

Coeff Coeff::eps()
{
	Coeff e;
	e.c_ = {Rat(0), Rat(1)};
	return e;
}

bool Coeff::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat &Coeff::rat() const
{
	static const Rat zero(0);
	require(is_rational(), "Coeff: eps-dependent value where a rational was required");
	return c_.empty() ? zero : c_[0];
}

const Rat &Coeff::at(int k) const
{
	static const Rat zero(0);
	if (k < 0 || k >= (int)c_.size())
		return zero;
	return c_[k];
}

void Coeff::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

Coeff Coeff::operator-() const
{
	Coeff r = *this;
	for (auto &x : r.c_)
		x = -x;
	return r;
}

Coeff &Coeff::operator+=(const Coeff &o)
{
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size(), Rat(0));
	for (size_t i = 0; i < o.c_.size(); ++i)
		c_[i] += o.c_[i];
	trim();
	return *this;
}

Coeff &Coeff::operator-=(const Coeff &o)
{
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size(), Rat(0));
	for (size_t i = 0; i < o.c_.size(); ++i)
		c_[i] -= o.c_[i];
	trim();
	return *this;
}

Coeff operator*(const Coeff &a, const Coeff &b)
{
	Coeff r;
	if (a.is_zero() || b.is_zero())
		return r;
	r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
	for (size_t i = 0; i < a.c_.size(); ++i) {
		if (a.c_[i] == 0)
			continue;
		for (size_t j = 0; j < b.c_.size(); ++j)
			if (b.c_[j] != 0)
				r.c_[i + j] += a.c_[i] * b.c_[j];
	}
	r.trim();
	return r;
}

Coeff &Coeff::operator*=(const Coeff &o) { return *this = *this * o; }

Coeff Coeff::div_rational(const Rat &r) const
{
	require(r != 0, "Coeff: division by zero");
	Coeff out = *this;
	for (auto &x : out.c_)
		x /= r;
	return out;
}

int Coeff::cmp(const Coeff &o) const
{
	if (c_.size() != o.c_.size())
		return c_.size() < o.c_.size() ? -1 : 1;
	for (size_t i = c_.size(); i-- > 0;) {
		int s = ::cmp(c_[i], o.c_[i]);
		if (s != 0)
			return s;
	}
	return 0;
}

Coeff Coeff::specialize_eps(const Rat &value) const
{
	// Horner
	Rat acc(0);
	for (size_t i = c_.size(); i-- > 0;)
		acc = acc * value + c_[i];
	return Coeff(acc);
}

std::string Coeff::to_string() const
{
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (size_t k = c_.size(); k-- > 0;) {
		const Rat &v = c_[k];
		if (v == 0)
			continue;
		Rat a = v;
		if (first) {
			if (a < 0) {
				os << "-";
				a = -a;
			}
		} else {
			os << (a < 0 ? " - " : " + ");
			if (a < 0)
				a = -a;
		}
		first = false;
		if (k == 0) {
			os << a;
		} else {
			if (a != 1)
				os << a << "*";
			os << "eps";
			if (k > 1)
				os << "^" << k;
		}
	}
	return os.str();
}

Coeff poly_divexact(const Coeff &a, const Coeff &b)
{
	require(!b.is_zero(), "Coeff: division by zero polynomial");
	if (a.is_zero())
		return Coeff();
	Coeff rem = a, q;
	int db = b.eps_degree();
	require(rem.eps_degree() >= db, "Coeff: inexact polynomial division");
	q.c_.assign(rem.eps_degree() - db + 1, Rat(0));
	while (!rem.is_zero() && rem.eps_degree() >= db) {
		int k = rem.eps_degree() - db;
		Rat f = rem.c_.back() / b.c_.back();
		q.c_[k] = f;
		for (int i = 0; i <= db; ++i)
			rem.c_[k + i] -= f * b.c_[i];
		rem.trim();
	}
	require(rem.is_zero(), "Coeff: inexact polynomial division");
	q.trim();
	return q;
}

Coeff poly_gcd(const Coeff &a, const Coeff &b)
{
	Coeff u = a, v = b;
	while (!v.is_zero()) {
		// u mod v
		int dv = v.eps_degree();
		while (!u.is_zero() && u.eps_degree() >= dv) {
			int k = u.eps_degree() - dv;
			Rat f = u.c_.back() / v.c_.back();
			for (int i = 0; i <= dv; ++i)
				u.c_[k + i] -= f * v.c_[i];
			u.trim();
		}
		std::swap(u, v);
	}
	if (!u.is_zero()) {
		Rat lead = u.c_.back();
		for (auto &x : u.c_)
			x /= lead; // monic
	}
	return u;
}

CoeffFrac::CoeffFrac(Coeff n, Coeff d) : num_(std::move(n)), den_(std::move(d))
{
	require(!den_.is_zero(), "CoeffFrac: zero denominator");
	normalize();
}

void CoeffFrac::normalize()
{
	if (num_.is_zero()) {
		den_ = Coeff(1);
		return;
	}
	Coeff g = poly_gcd(num_, den_);
	if (!g.is_one()) {
		num_ = poly_divexact(num_, g);
		den_ = poly_divexact(den_, g);
	}
	// scale so den has leading coefficient 1
	Rat lead = den_.at(den_.eps_degree());
	if (lead != 1) {
		num_ = num_.div_rational(lead);
		den_ = den_.div_rational(lead);
	}
}

CoeffFrac CoeffFrac::operator-() const
{
	CoeffFrac r = *this;
	r.num_ = -r.num_;
	return r;
}

CoeffFrac operator+(const CoeffFrac &a, const CoeffFrac &b)
{
	return CoeffFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CoeffFrac operator-(const CoeffFrac &a, const CoeffFrac &b)
{
	return CoeffFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

CoeffFrac operator*(const CoeffFrac &a, const CoeffFrac &b)
{
	return CoeffFrac(a.num_ * b.num_, a.den_ * b.den_);
}

CoeffFrac operator/(const CoeffFrac &a, const CoeffFrac &b)
{
	require(!b.is_zero(), "CoeffFrac: division by zero");
	return CoeffFrac(a.num_ * b.den_, a.den_ * b.num_);
}

bool CoeffFrac::operator==(const CoeffFrac &o) const
{
	return num_ * o.den_ == o.num_ * den_;
}

Coeff CoeffFrac::to_coeff() const
{
	if (den_.is_rational())
		return num_.div_rational(den_.rat());
	// a genuine eps-polynomial denominator may still divide exactly
	return poly_divexact(num_, den_);
}

} // namespace ybgeo
