#include "core/vfield.hpp"

#include <sstream>

namespace ybgeo {

bool VectorField::is_zero() const
{
	for (const auto &c : comps)
		if (!c.is_zero())
			return false;
	return true;
}

VectorField VectorField::operator-() const
{
	VectorField r = *this;
	for (auto &c : r.comps)
		c = -c;
	return r;
}

VectorField operator+(const VectorField &a, const VectorField &b)
{
	require(a.arity == b.arity, "VectorField: arity mismatch");
	VectorField r = a;
	for (int i = 0; i < r.arity; ++i)
		r.comps[i] += b.comps[i];
	return r;
}

VectorField operator-(const VectorField &a, const VectorField &b) { return a + (-b); }

VectorField VectorField::scale(const Coeff &c) const
{
	VectorField r = *this;
	for (auto &p : r.comps)
		p = p.scale(c);
	return r;
}

VectorField VectorField::specialize_eps(const Rat &value) const
{
	VectorField r = *this;
	for (auto &p : r.comps)
		p = p.specialize_eps(value);
	return r;
}

VectorField VectorField::remap(int new_arity, const std::vector<int> &map) const
{
	require((int)map.size() == arity, "VectorField: remap table size mismatch");
	VectorField r(new_arity);
	for (int i = 0; i < arity; ++i)
		r.comps[map[i]] = comps[i].remap(new_arity, map);
	return r;
}

std::string VectorField::to_string(int block_width) const
{
	std::ostringstream os;
	os << "[";
	for (int i = 0; i < arity; ++i) {
		if (i)
			os << ", ";
		os << comps[i].to_string(block_width);
	}
	os << "]";
	return os.str();
}

MPoly vf_apply(const VectorField &v, const MPoly &f)
{
	require(v.arity == f.arity(), "vf_apply: arity mismatch");
	MPoly r(f.arity());
	for (int i = 0; i < v.arity; ++i) {
		if (v.comps[i].is_zero())
			continue;
		r += v.comps[i] * f.diff(i);
	}
	return r;
}

VectorField vf_bracket(const VectorField &v, const VectorField &w)
{
	require(v.arity == w.arity, "vf_bracket: arity mismatch");
	VectorField r(v.arity);
	for (int i = 0; i < v.arity; ++i)
		r.comps[i] = vf_apply(v, w.comps[i]) - vf_apply(w, v.comps[i]);
	return r;
}

void HVectorField::check_valuation() const
{
	for (const auto &c : comps)
		require(c.valuation() >= 1, "HVectorField: valuation 0 component");
}

HVectorField HVectorField::operator-() const
{
	HVectorField r = *this;
	for (auto &c : r.comps)
		c = -c;
	return r;
}

HVectorField operator+(const HVectorField &a, const HVectorField &b)
{
	require(a.arity == b.arity && a.order == b.order, "HVectorField: shape mismatch");
	HVectorField r = a;
	for (int i = 0; i < r.arity; ++i)
		r.comps[i] += b.comps[i];
	return r;
}

bool HVectorField::is_zero() const
{
	for (const auto &c : comps)
		if (!c.is_zero())
			return false;
	return true;
}

HSeries hvf_apply(const HVectorField &v, const HSeries &s)
{
	require(v.arity == s.arity(), "hvf_apply: arity mismatch");
	HSeries r(s.arity(), s.order());
	for (int i = 0; i < v.arity; ++i) {
		if (v.comps[i].is_zero())
			continue;
		r += v.comps[i] * s.diff(i);
	}
	return r;
}

HVectorField hvf_bracket(const HVectorField &v, const HVectorField &w)
{
	require(v.arity == w.arity && v.order == w.order, "hvf_bracket: shape mismatch");
	HVectorField r(v.arity, v.order);
	for (int i = 0; i < v.arity; ++i)
		r.comps[i] = hvf_apply(v, w.comps[i]) - hvf_apply(w, v.comps[i]);
	return r;
}

FormalDiffeo FormalDiffeo::identity(int m, int N)
{
	FormalDiffeo f;
	f.arity = m;
	f.order = N;
	for (int i = 0; i < m; ++i)
		f.images.push_back(HSeries::var(m, N, i));
	return f;
}

void FormalDiffeo::check_shape() const
{
	require((int)images.size() == arity, "FormalDiffeo: component count mismatch");
	for (int i = 0; i < arity; ++i)
		require(images[i].at(0) == MPoly::var(arity, i),
		        "FormalDiffeo: not the identity mod h");
}

bool FormalDiffeo::is_identity() const { return *this == identity(arity, order); }

FormalDiffeo flow(const HVectorField &v)
{
	v.check_valuation();
	FormalDiffeo f;
	f.arity = v.arity;
	f.order = v.order;
	for (int i = 0; i < v.arity; ++i) {
		HSeries s = HSeries::var(v.arity, v.order, i);
		HSeries term = s;
		Rat fact(1);
		for (int k = 1; k <= v.order; ++k) {
			term = hvf_apply(v, term);
			if (term.is_zero())
				break;
			fact *= k;
			s += term.scale(Coeff(Rat(1) / fact));
		}
		f.images.push_back(std::move(s));
	}
	return f;
}

FormalDiffeo compose(const FormalDiffeo &F, const FormalDiffeo &G)
{
	require(F.arity == G.arity && F.order == G.order, "compose: shape mismatch");
	FormalDiffeo r;
	r.arity = F.arity;
	r.order = F.order;
	for (int i = 0; i < G.arity; ++i)
		r.images.push_back(G.images[i].subst(F.images));
	return r;
}

FormalDiffeo invert(const FormalDiffeo &F)
{
	F.check_shape();
	int m = F.arity, N = F.order;
	// F = id + phi, seek H = id + psi with psi = -phi(H); one h-order per pass
	std::vector<HSeries> phi;
	for (int i = 0; i < m; ++i)
		phi.push_back(F.images[i] - HSeries::var(m, N, i));
	std::vector<HSeries> psi(m, HSeries(m, N));
	for (int it = 0; it <= N; ++it) {
		std::vector<HSeries> H;
		for (int i = 0; i < m; ++i)
			H.push_back(HSeries::var(m, N, i) + psi[i]);
		std::vector<HSeries> next;
		for (int i = 0; i < m; ++i)
			next.push_back(-phi[i].subst(H));
		psi = std::move(next);
	}
	FormalDiffeo r;
	r.arity = m;
	r.order = N;
	for (int i = 0; i < m; ++i)
		r.images.push_back(HSeries::var(m, N, i) + psi[i]);
	return r;
}

FormalDiffeo place(const FormalDiffeo &F, int n, int i, int j, int k)
{
	require(F.arity == 2 * n, "place: expected a diffeomorphism of X^2");
	require(1 <= i && i < j && j <= k, "place: factor indices must satisfy 1 <= i < j <= k");
	int m = k * n;
	std::vector<int> map(2 * n);
	for (int c = 0; c < n; ++c) {
		map[c] = (i - 1) * n + c;
		map[n + c] = (j - 1) * n + c;
	}
	FormalDiffeo r = FormalDiffeo::identity(m, F.order);
	for (int c = 0; c < n; ++c) {
		r.images[map[c]] = F.images[c].remap(m, map);
		r.images[map[n + c]] = F.images[n + c].remap(m, map);
	}
	return r;
}

} // namespace ybgeo
