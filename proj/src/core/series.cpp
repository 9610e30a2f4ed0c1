#include "core/series.hpp"

#include <sstream>

namespace ybgeo {

HSeries HSeries::constant(int arity, int order, Coeff v)
{
	HSeries s(arity, order);
	s.c_[0] = MPoly::constant(arity, std::move(v));
	return s;
}

HSeries HSeries::of_poly(const MPoly &p, int order)
{
	HSeries s(p.arity(), order);
	s.c_[0] = p;
	return s;
}

HSeries HSeries::var(int arity, int order, int i)
{
	return of_poly(MPoly::var(arity, i), order);
}

HSeries HSeries::hbar(int arity, int order)
{
	HSeries s(arity, order);
	require(order >= 1, "HSeries: h does not fit at order 0");
	s.c_[1] = MPoly::constant(arity, Coeff(1));
	return s;
}

const MPoly &HSeries::at(int m) const
{
	require(m >= 0 && m <= order_, "HSeries: order index out of range");
	return c_[m];
}

MPoly &HSeries::at(int m)
{
	require(m >= 0 && m <= order_, "HSeries: order index out of range");
	return c_[m];
}

bool HSeries::is_zero() const
{
	for (const auto &p : c_)
		if (!p.is_zero())
			return false;
	return true;
}

int HSeries::valuation() const
{
	for (int m = 0; m <= order_; ++m)
		if (!c_[m].is_zero())
			return m;
	return order_ + 1;
}

void check_compatible(const HSeries &a, const HSeries &b)
{
	require(a.order() == b.order(), "HSeries: mixed truncation orders");
	require(a.arity() == b.arity(), "HSeries: arity mismatch");
}

HSeries HSeries::operator-() const
{
	HSeries r = *this;
	for (auto &p : r.c_)
		p = -p;
	return r;
}

HSeries operator+(const HSeries &a, const HSeries &b)
{
	check_compatible(a, b);
	HSeries r = a;
	for (int m = 0; m <= r.order_; ++m)
		r.c_[m] += b.c_[m];
	return r;
}

HSeries operator-(const HSeries &a, const HSeries &b)
{
	check_compatible(a, b);
	HSeries r = a;
	for (int m = 0; m <= r.order_; ++m)
		r.c_[m] -= b.c_[m];
	return r;
}

HSeries operator*(const HSeries &a, const HSeries &b)
{
	check_compatible(a, b);
	HSeries r(a.arity_, a.order_);
	for (int i = 0; i <= a.order_; ++i) {
		if (a.c_[i].is_zero())
			continue;
		for (int j = 0; j + i <= a.order_; ++j) {
			if (b.c_[j].is_zero())
				continue;
			r.c_[i + j] += a.c_[i] * b.c_[j];
		}
	}
	return r;
}

HSeries HSeries::scale(const Coeff &c) const
{
	HSeries r = *this;
	for (auto &p : r.c_)
		p = p.scale(c);
	return r;
}

HSeries HSeries::scale_poly(const MPoly &p) const
{
	HSeries r = *this;
	for (auto &q : r.c_)
		q = q * p;
	return r;
}

HSeries HSeries::shift(int k) const
{
	require(k >= 0, "HSeries: negative shift");
	HSeries r(arity_, order_);
	for (int m = 0; m + k <= order_; ++m)
		r.c_[m + k] = c_[m];
	return r;
}

bool HSeries::operator==(const HSeries &o) const
{
	return arity_ == o.arity_ && order_ == o.order_ && c_ == o.c_;
}

HSeries HSeries::inverse() const
{
	const MPoly &lead = c_[0];
	require(lead.is_constant(), "HSeries: inverse needs a constant h^0 term");
	Coeff c0 = lead.constant_term();
	require(!c0.is_zero() && c0.is_rational(),
	        "HSeries: inverse needs a nonzero rational h^0 term");
	Rat u = c0.rat();
	// a = u(1+E), E of positive valuation; 1/a = (1/u) sum (-E)^k
	HSeries e = scale(Coeff(Rat(1) / u));
	e.c_[0] = MPoly(arity_);
	HSeries r = constant(arity_, order_, Coeff(Rat(1) / u));
	HSeries term = r;
	for (int k = 0; k < order_; ++k) {
		term = term * (-e);
		if (term.is_zero())
			break;
		r += term;
	}
	return r;
}

HSeries HSeries::log1() const
{
	require(c_[0] == MPoly::constant(arity_, Coeff(1)),
	        "HSeries: ln needs h^0 term equal to 1");
	HSeries e = *this;
	e.c_[0] = MPoly(arity_);
	HSeries r(arity_, order_);
	HSeries term = constant(arity_, order_, Coeff(1));
	for (int k = 1; k <= order_; ++k) {
		term = term * e;
		if (term.is_zero())
			break;
		r += term.scale(Coeff((k % 2) ? 1L : -1L, k));
	}
	return r;
}

HSeries HSeries::exp_val() const
{
	require(valuation() >= 1, "HSeries: exp needs positive valuation");
	HSeries r = constant(arity_, order_, Coeff(1));
	HSeries term = constant(arity_, order_, Coeff(1));
	Rat fact(1);
	for (int k = 1; k <= order_; ++k) {
		term = term * *this;
		if (term.is_zero())
			break;
		fact *= k;
		r += term.scale(Coeff(Rat(1) / fact));
	}
	return r;
}

HSeries HSeries::diff(int var) const
{
	HSeries r(arity_, order_);
	for (int m = 0; m <= order_; ++m)
		r.c_[m] = c_[m].diff(var);
	return r;
}

HSeries HSeries::specialize_eps(const Rat &value) const
{
	HSeries r(arity_, order_);
	for (int m = 0; m <= order_; ++m)
		r.c_[m] = c_[m].specialize_eps(value);
	return r;
}

HSeries HSeries::remap(int new_arity, const std::vector<int> &map) const
{
	HSeries r(new_arity, order_);
	for (int m = 0; m <= order_; ++m)
		r.c_[m] = c_[m].remap(new_arity, map);
	return r;
}

HSeries HSeries::embed(int new_arity, int offset) const
{
	HSeries r(new_arity, order_);
	for (int m = 0; m <= order_; ++m)
		r.c_[m] = c_[m].embed(new_arity, offset);
	return r;
}

namespace {

// power cache for substitution images
struct PowerCache {
	const std::vector<HSeries> *images;
	std::vector<std::vector<HSeries>> pw; // pw[i][e-1] = images[i]^e

	const HSeries &power(int i, unsigned e)
	{
		auto &v = pw[i];
		while (v.size() < e) {
			if (v.empty())
				v.push_back((*images)[i]);
			else
				v.push_back(v.back() * (*images)[i]);
		}
		return v[e - 1];
	}
};

} // namespace

HSeries mpoly_subst(const MPoly &p, const std::vector<HSeries> &images)
{
	require((int)images.size() == p.arity(), "subst: one image per variable required");
	for (size_t i = 1; i < images.size(); ++i)
		check_compatible(images[0], images[i]);
	require(!images.empty(), "subst: zero-arity polynomial has no images");
	int arity = images[0].arity();
	int order = images[0].order();
	PowerCache cache{&images, std::vector<std::vector<HSeries>>(images.size())};
	HSeries out(arity, order);
	for (const auto &t : p.terms()) {
		HSeries term = HSeries::constant(arity, order, t.c);
		for (int i = 0; i < p.arity(); ++i) {
			unsigned e = t.m.exp(i);
			if (e)
				term = term * cache.power(i, e);
		}
		out += term;
	}
	return out;
}

HSeries HSeries::subst(const std::vector<HSeries> &images) const
{
	require((int)images.size() == arity_, "subst: one image per variable required");
	if (arity_ == 0) {
		// nothing to substitute, but the result may live in a different ring
		fail("subst: zero-arity series");
	}
	int arity = images[0].arity();
	int order = images[0].order();
	require(order == order_, "HSeries: mixed truncation orders in subst");
	PowerCache cache{&images, std::vector<std::vector<HSeries>>(images.size())};
	HSeries out(arity, order);
	for (int m = 0; m <= order_; ++m) {
		if (c_[m].is_zero())
			continue;
		HSeries val(arity, order);
		for (const auto &t : c_[m].terms()) {
			HSeries term = HSeries::constant(arity, order, t.c);
			for (int i = 0; i < arity_; ++i) {
				unsigned e = t.m.exp(i);
				if (e)
					term = term * cache.power(i, e);
			}
			val += term;
		}
		out += val.shift(m);
	}
	return out;
}

std::string HSeries::to_string(int block_width) const
{
	std::ostringstream os;
	bool first = true;
	for (int m = 0; m <= order_; ++m) {
		if (c_[m].is_zero())
			continue;
		if (!first)
			os << " + ";
		first = false;
		if (m == 0)
			os << "(" << c_[m].to_string(block_width) << ")";
		else {
			os << "h";
			if (m > 1)
				os << "^" << m;
			os << "*(" << c_[m].to_string(block_width) << ")";
		}
	}
	if (first)
		os << "0";
	return os.str();
}

} // namespace ybgeo
