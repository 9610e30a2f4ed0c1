#include "core/rmatrix.hpp"

#include "core/linalg.hpp"
#include <algorithm>
#include <map>
#include <sstream>

namespace ybgeo {

GeomRMatrix GeomRMatrix::specialize_eps(const Rat &value) const
{
	GeomRMatrix r(n);
	for (const auto &[vf, fn] : a_terms) {
		auto v = vf.specialize_eps(value);
		auto f = fn.specialize_eps(value);
		if (!v.is_zero() && !f.is_zero())
			r.a_terms.emplace_back(std::move(v), std::move(f));
	}
	for (const auto &[fn, vf] : b_terms) {
		auto f = fn.specialize_eps(value);
		auto v = vf.specialize_eps(value);
		if (!v.is_zero() && !f.is_zero())
			r.b_terms.emplace_back(std::move(f), std::move(v));
	}
	return r;
}

GeomRMatrix GeomRMatrix::flip() const
{
	GeomRMatrix r(n);
	for (const auto &[fn, vf] : b_terms)
		r.a_terms.emplace_back(vf, fn);
	for (const auto &[vf, fn] : a_terms)
		r.b_terms.emplace_back(fn, vf);
	return r;
}

GeomRMatrix GeomRMatrix::negate() const
{
	GeomRMatrix r = *this;
	for (auto &[vf, fn] : r.a_terms)
		fn = -fn;
	for (auto &[fn, vf] : r.b_terms)
		fn = -fn;
	return r;
}

bool GeomRMatrix::equals(const GeomRMatrix &o) const
{
	return n == o.n && as_field_on_square(*this) == as_field_on_square(o);
}

namespace {

// Canonical rank factorization of sum_k field_k (x) fn_k. Returns pairs with
// the function side in RREF (graded-lex pivoting) and fields read off the
// pivot columns. Shared by both term lists (the b-side passes swapped pairs).
std::vector<std::pair<VectorField, MPoly>> minimize_side(
    int n, const std::vector<std::pair<VectorField, MPoly>> &terms)
{
	if (terms.empty())
		return {};
	// collect monomial supports, descending graded-lex
	std::vector<Mono> fmons, vmons; // function monomials / (component, monomial) coords
	std::map<Mono::Key, int> fidx;
	struct VCoord {
		int comp;
		Mono m;
	};
	std::vector<VCoord> vcoords;
	std::map<std::pair<int, Mono::Key>, int> vidx;
	for (const auto &[vf, fn] : terms) {
		for (const auto &t : fn.terms())
			fidx.emplace(t.m.key, 0);
		for (int c = 0; c < n; ++c)
			for (const auto &t : vf.comps[c].terms())
				vidx.emplace(std::make_pair(c, t.m.key), 0);
	}
	for (auto &[k, v] : fidx) {
		v = (int)fmons.size();
		Mono m;
		m.key = k;
		fmons.push_back(m);
	}
	for (auto &[k, v] : vidx) {
		v = (int)vcoords.size();
		Mono m;
		m.key = k.second;
		vcoords.push_back({k.first, m});
	}
	// columns in DESCENDING graded-lex so pivots hit leading monomials first
	std::vector<int> forder(fmons.size());
	for (size_t i = 0; i < forder.size(); ++i)
		forder[i] = (int)i;
	std::sort(forder.begin(), forder.end(),
	          [&](int a, int b) { return fmons[b] < fmons[a]; });
	std::vector<int> colpos(fmons.size());
	for (size_t i = 0; i < forder.size(); ++i)
		colpos[forder[i]] = (int)i;

	int P = (int)vcoords.size(), Q = (int)fmons.size();
	FMatrix M(P, Q);
	for (const auto &[vf, fn] : terms)
		for (int c = 0; c < n; ++c)
			for (const auto &tv : vf.comps[c].terms()) {
				int p = vidx[{c, tv.m.key}];
				for (const auto &tf : fn.terms()) {
					int qcol = colpos[fidx[tf.m.key]];
					M.at(p, qcol) = M.at(p, qcol) + CoeffFrac(tv.c * tf.c);
				}
			}
	FMatrix G = M;
	std::vector<int> piv = rref(G);
	int rank = (int)piv.size();
	std::vector<std::pair<VectorField, MPoly>> out;
	for (int k = 0; k < rank; ++k) {
		MPoly fn(terms[0].second.arity());
		for (int q = 0; q < Q; ++q) {
			const CoeffFrac &g = G.at(k, q);
			if (!g.is_zero())
				fn.add_term(fmons[forder[q]], g.to_coeff());
		}
		VectorField vf(n);
		for (int p = 0; p < P; ++p) {
			const CoeffFrac &u = M.at(p, piv[k]);
			if (!u.is_zero())
				vf.comps[vcoords[p].comp].add_term(vcoords[p].m, u.to_coeff());
		}
		if (!vf.is_zero() && !fn.is_zero())
			out.emplace_back(std::move(vf), std::move(fn));
	}
	return out;
}

bool side_is_minimal(int n, const std::vector<std::pair<VectorField, MPoly>> &terms)
{
	if (terms.empty())
		return true;
	// both the field list and the function list must be linearly independent
	std::map<Mono::Key, int> fidx;
	std::map<std::pair<int, Mono::Key>, int> vidx;
	for (const auto &[vf, fn] : terms) {
		for (const auto &t : fn.terms())
			fidx.emplace(t.m.key, (int)fidx.size());
		for (int c = 0; c < n; ++c)
			for (const auto &t : vf.comps[c].terms())
				vidx.emplace(std::make_pair(c, t.m.key), (int)vidx.size());
	}
	FMatrix F((int)terms.size(), (int)fidx.size());
	FMatrix V((int)terms.size(), (int)vidx.size());
	for (size_t i = 0; i < terms.size(); ++i) {
		for (const auto &t : terms[i].second.terms())
			F.at((int)i, fidx[t.m.key]) = CoeffFrac(t.c);
		for (int c = 0; c < n; ++c)
			for (const auto &t : terms[i].first.comps[c].terms())
				V.at((int)i, vidx[{c, t.m.key}]) = CoeffFrac(t.c);
	}
	int k = (int)terms.size();
	return rank(F) == k && rank(V) == k;
}

} // namespace

GeomRMatrix minimize(const GeomRMatrix &r)
{
	GeomRMatrix out(r.n);
	out.a_terms = minimize_side(r.n, r.a_terms);
	std::vector<std::pair<VectorField, MPoly>> bswapped;
	for (const auto &[fn, vf] : r.b_terms)
		bswapped.emplace_back(vf, fn);
	for (auto &[vf, fn] : minimize_side(r.n, bswapped))
		out.b_terms.emplace_back(std::move(fn), std::move(vf));
	return out;
}

bool is_minimal(const GeomRMatrix &r)
{
	std::vector<std::pair<VectorField, MPoly>> bswapped;
	for (const auto &[fn, vf] : r.b_terms)
		bswapped.emplace_back(vf, fn);
	return side_is_minimal(r.n, r.a_terms) && side_is_minimal(r.n, bswapped);
}

VectorField as_field_on_square(const GeomRMatrix &r) { return r_field_placed(r, 1, 2, 2); }

VectorField r_field_placed(const GeomRMatrix &r, int i, int j, int k)
{
	require(1 <= i && i < j && j <= k, "r_field_placed: bad factor indices");
	int m = k * r.n, oi = (i - 1) * r.n, oj = (j - 1) * r.n;
	VectorField f(m);
	for (const auto &[vf, fn] : r.a_terms) {
		MPoly fy = fn.embed(m, oj);
		for (int c = 0; c < r.n; ++c)
			if (!vf.comps[c].is_zero())
				f.comps[oi + c] += vf.comps[c].embed(m, oi) * fy;
	}
	for (const auto &[fn, vf] : r.b_terms) {
		MPoly fx = fn.embed(m, oi);
		for (int c = 0; c < r.n; ++c)
			if (!vf.comps[c].is_zero())
				f.comps[oj + c] += vf.comps[c].embed(m, oj) * fx;
	}
	return f;
}

Report check_cybe(const GeomRMatrix &r)
{
	Report rep;
	VectorField r12 = r_field_placed(r, 1, 2, 3);
	VectorField r13 = r_field_placed(r, 1, 3, 3);
	VectorField r23 = r_field_placed(r, 2, 3, 3);
	VectorField sum = vf_bracket(r12, r13) + vf_bracket(r12, r23) + vf_bracket(r13, r23);
	if (sum.is_zero()) {
		rep.add("cybe", true);
	} else {
		int c = 0;
		while (sum.comps[c].is_zero())
			++c;
		std::ostringstream os;
		os << "residual field component " << c + 1 << " on X^3: "
		   << sum.comps[c].to_string(r.n);
		rep.add("cybe", false, os.str());
	}
	return rep;
}

Report check_cybe_split(const GeomRMatrix &r)
{
	require(is_minimal(r), "check_cybe_split: r is not in minimal presentation");
	Report rep;
	int n = r.n, m = 3 * n;
	auto embed = [&](const MPoly &p, int block) { return p.embed(m, block * n); };
	auto &A = r.a_terms;
	auto &B = r.b_terms;

	// eq 1, in Vect (x) O (x) O: vector slot on the x block
	{
		std::vector<MPoly> acc(n, MPoly(m));
		for (const auto &[ai, a0i] : A)
			for (const auto &[ak, a0k] : A) {
				VectorField br = vf_bracket(ai, ak);
				MPoly tail = embed(a0i, 1) * embed(a0k, 2);
				MPoly mid = embed(vf_apply(ak, a0i), 1) * embed(a0k, 2);
				for (int c = 0; c < n; ++c) {
					acc[c] += embed(br.comps[c], 0) * tail;
					acc[c] -= embed(ai.comps[c], 0) * mid;
				}
			}
		for (const auto &[ai, a0i] : A)
			for (const auto &[b0l, bl] : B) {
				MPoly tail = embed(b0l, 1) * embed(vf_apply(bl, a0i), 2);
				for (int c = 0; c < n; ++c)
					acc[c] -= embed(ai.comps[c], 0) * tail;
			}
		bool ok = true;
		for (const auto &p : acc)
			if (!p.is_zero())
				ok = false;
		rep.add("cybe.component1", ok, ok ? "" : "nonzero Vect@O@O residual");
	}
	// eq 2, in O (x) Vect (x) O: vector slot on the y block
	{
		std::vector<MPoly> acc(n, MPoly(m));
		for (const auto &[b0j, bj] : B)
			for (const auto &[ak, a0k] : A) {
				MPoly t1 = embed(vf_apply(ak, b0j), 0) * embed(a0k, 2);
				VectorField br = vf_bracket(bj, ak);
				MPoly t2 = embed(b0j, 0) * embed(a0k, 2);
				MPoly t3 = embed(b0j, 0) * embed(vf_apply(bj, a0k), 2);
				for (int c = 0; c < n; ++c) {
					acc[c] -= t1 * embed(bj.comps[c], 1);
					acc[c] += t2 * embed(br.comps[c], 1);
					acc[c] += t3 * embed(ak.comps[c], 1);
				}
			}
		bool ok = true;
		for (const auto &p : acc)
			if (!p.is_zero())
				ok = false;
		rep.add("cybe.component2", ok, ok ? "" : "nonzero O@Vect@O residual");
	}
	// eq 3, in O (x) O (x) Vect: vector slot on the z block
	{
		std::vector<MPoly> acc(n, MPoly(m));
		for (const auto &[ai, a0i] : A)
			for (const auto &[b0l, bl] : B) {
				MPoly t = embed(vf_apply(ai, b0l), 0) * embed(a0i, 1);
				for (int c = 0; c < n; ++c)
					acc[c] += t * embed(bl.comps[c], 2);
			}
		for (const auto &[b0j, bj] : B)
			for (const auto &[b0l, bl] : B) {
				MPoly t = embed(b0j, 0) * embed(vf_apply(bj, b0l), 1);
				VectorField br = vf_bracket(bj, bl);
				MPoly t2 = embed(b0j, 0) * embed(b0l, 1);
				for (int c = 0; c < n; ++c) {
					acc[c] += t * embed(bl.comps[c], 2);
					acc[c] += t2 * embed(br.comps[c], 2);
				}
			}
		bool ok = true;
		for (const auto &p : acc)
			if (!p.is_zero())
				ok = false;
		rep.add("cybe.component3", ok, ok ? "" : "nonzero O@O@Vect residual");
	}
	return rep;
}

bool check_unitarity(const GeomRMatrix &r)
{
	return as_field_on_square(r.flip()) == -as_field_on_square(r);
}

} // namespace ybgeo
