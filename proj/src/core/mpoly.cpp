#include "core/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ybgeo {

MPoly MPoly::constant(int arity, Coeff c)
{
	MPoly p(arity);
	if (!c.is_zero())
		p.terms_.push_back({Mono{}, std::move(c)});
	return p;
}

MPoly MPoly::var(int arity, int i, unsigned e)
{
	MPoly p(arity);
	require(i >= 0 && i < arity, "MPoly: variable index out of range");
	if (e > 0)
		p.terms_.push_back({Mono::var(i, e), Coeff(1)});
	else
		p.terms_.push_back({Mono{}, Coeff(1)});
	return p;
}

bool MPoly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_constant());
}

Coeff MPoly::constant_term() const
{
	if (!terms_.empty() && terms_.back().m.is_constant())
		return terms_.back().c;
	return Coeff();
}

Coeff MPoly::coeff(const Mono &m) const
{
	// terms sorted descending
	auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
	                           [](const Term &t, const Mono &k) { return k < t.m; });
	if (it != terms_.end() && it->m == m)
		return it->c;
	return Coeff();
}

void MPoly::canonicalize()
{
	std::sort(terms_.begin(), terms_.end(),
	          [](const Term &a, const Term &b) { return b.m < a.m; });
	size_t w = 0;
	for (size_t i = 0; i < terms_.size();) {
		Mono m = terms_[i].m;
		Coeff c = std::move(terms_[i].c);
		size_t j = i + 1;
		while (j < terms_.size() && terms_[j].m == m)
			c += terms_[j++].c;
		if (!c.is_zero())
			terms_[w++] = {m, std::move(c)};
		i = j;
	}
	terms_.resize(w);
}

void MPoly::add_term(const Mono &m, const Coeff &c)
{
	if (c.is_zero())
		return;
	terms_.push_back({m, c});
	canonicalize();
}

MPoly MPoly::operator-() const
{
	MPoly r = *this;
	for (auto &t : r.terms_)
		t.c = -t.c;
	return r;
}

static void check_same_arity(const MPoly &a, const MPoly &b)
{
	require(a.arity() == b.arity(), "MPoly: arity mismatch");
}

MPoly operator+(const MPoly &a, const MPoly &b)
{
	check_same_arity(a, b);
	MPoly r(a.arity());
	r.terms_.reserve(a.terms_.size() + b.terms_.size());
	auto ia = a.terms_.begin(), ib = b.terms_.begin();
	while (ia != a.terms_.end() && ib != b.terms_.end()) {
		if (ib->m < ia->m)
			r.terms_.push_back(*ia++);
		else if (ia->m < ib->m)
			r.terms_.push_back(*ib++);
		else {
			Coeff c = ia->c + ib->c;
			if (!c.is_zero())
				r.terms_.push_back({ia->m, std::move(c)});
			++ia, ++ib;
		}
	}
	r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
	r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
	return r;
}

MPoly operator-(const MPoly &a, const MPoly &b) { return a + (-b); }

MPoly operator*(const MPoly &a, const MPoly &b)
{
	check_same_arity(a, b);
	MPoly r(a.arity());
	if (a.is_zero() || b.is_zero())
		return r;
	r.terms_.reserve(a.terms_.size() * b.terms_.size());
	for (const auto &ta : a.terms_)
		for (const auto &tb : b.terms_)
			r.terms_.push_back({ta.m * tb.m, ta.c * tb.c});
	r.canonicalize();
	return r;
}

MPoly MPoly::scale(const Coeff &c) const
{
	MPoly r(arity_);
	if (c.is_zero())
		return r;
	r.terms_.reserve(terms_.size());
	for (const auto &t : terms_) {
		Coeff x = t.c * c;
		if (!x.is_zero())
			r.terms_.push_back({t.m, std::move(x)});
	}
	// eps-polynomial scaling cannot reorder monomials
	return r;
}

MPoly MPoly::diff(int var) const
{
	require(var >= 0 && var < arity_, "MPoly: derivative index out of range");
	MPoly r(arity_);
	r.terms_.reserve(terms_.size());
	for (const auto &t : terms_) {
		unsigned e = t.m.exp(var);
		if (e == 0)
			continue;
		r.terms_.push_back({t.m.div_var(var), t.c * Coeff((long)e)});
	}
	// dividing every kept term by the same variable preserves graded-lex order
	return r;
}

MPoly MPoly::specialize_eps(const Rat &value) const
{
	MPoly r(arity_);
	r.terms_.reserve(terms_.size());
	for (const auto &t : terms_) {
		Coeff c = t.c.specialize_eps(value);
		if (!c.is_zero())
			r.terms_.push_back({t.m, std::move(c)});
	}
	return r;
}

MPoly MPoly::remap(int new_arity, const std::vector<int> &map) const
{
	require((int)map.size() == arity_, "MPoly: remap table size mismatch");
	MPoly r(new_arity);
	r.terms_.reserve(terms_.size());
	for (const auto &t : terms_) {
		Mono m;
		for (int i = 0; i < arity_; ++i) {
			unsigned e = t.m.exp(i);
			if (e) {
				require(map[i] >= 0 && map[i] < new_arity, "MPoly: remap target out of range");
				m = m * Mono::var(map[i], e);
			}
		}
		r.terms_.push_back({m, t.c});
	}
	r.canonicalize();
	return r;
}

MPoly MPoly::embed(int new_arity, int offset) const
{
	std::vector<int> map(arity_);
	for (int i = 0; i < arity_; ++i)
		map[i] = offset + i;
	return remap(new_arity, map);
}

int MPoly::cmp(const MPoly &o) const
{
	size_t n = std::min(terms_.size(), o.terms_.size());
	for (size_t i = 0; i < n; ++i) {
		if (terms_[i].m < o.terms_[i].m)
			return -1;
		if (o.terms_[i].m < terms_[i].m)
			return 1;
		int s = terms_[i].c.cmp(o.terms_[i].c);
		if (s != 0)
			return s;
	}
	if (terms_.size() != o.terms_.size())
		return terms_.size() < o.terms_.size() ? -1 : 1;
	return 0;
}

std::string var_name(int index, int block_width)
{
	static const char *blocks = "xyz";
	int b = index / block_width, pos = index % block_width;
	require(b < 3, "var_name: more than three variable blocks");
	std::ostringstream os;
	os << blocks[b] << (pos + 1);
	return os.str();
}

std::string mono_to_string(const Mono &m, int arity, int block_width)
{
	std::ostringstream os;
	bool first = true;
	for (int i = 0; i < arity; ++i) {
		unsigned e = m.exp(i);
		if (!e)
			continue;
		if (!first)
			os << "*";
		first = false;
		os << var_name(i, block_width);
		if (e > 1)
			os << "^" << e;
	}
	return os.str();
}

std::string MPoly::to_string(int block_width) const
{
	if (terms_.empty())
		return "0";
	if (block_width == 0)
		block_width = arity_ ? arity_ : 1;
	std::ostringstream os;
	bool first = true;
	for (const auto &t : terms_) {
		std::string cs = t.c.to_string();
		bool simple = t.c.is_rational();
		bool negated = false;
		if (simple && t.c.rat() < 0) {
			negated = true;
			cs = (-t.c).to_string();
		}
		os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
		first = false;
		if (t.m.is_constant()) {
			os << (simple ? cs : "(" + cs + ")");
			continue;
		}
		bool unit = simple && cs == "1";
		if (!unit)
			os << (simple ? cs : "(" + cs + ")") << "*";
		os << mono_to_string(t.m, arity_, block_width);
	}
	return os.str();
}

} // namespace ybgeo
