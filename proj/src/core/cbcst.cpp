#include "core/cbcst.hpp"

#include <map>
#include <sstream>

namespace ybgeo {

namespace {

// echelon machinery over the monomial support of a set of polynomials
struct SpanBasis {
	std::vector<Mono> mons; // descending graded-lex
	FMatrix rrefm;          // reduced rows over mons
	std::vector<int> pivots;

	static SpanBasis of(const std::vector<MPoly> &polys)
	{
		SpanBasis sb;
		std::map<Mono::Key, int> seen;
		for (const auto &p : polys)
			for (const auto &t : p.terms())
				seen.emplace(t.m.key, 0);
		for (auto &[k, v] : seen) {
			Mono m;
			m.key = k;
			sb.mons.push_back(m);
		}
		std::sort(sb.mons.begin(), sb.mons.end(),
		          [](const Mono &a, const Mono &b) { return b < a; });
		std::map<Mono::Key, int> col;
		for (size_t i = 0; i < sb.mons.size(); ++i)
			col[sb.mons[i].key] = (int)i;
		FMatrix m((int)polys.size(), (int)sb.mons.size());
		for (size_t i = 0; i < polys.size(); ++i)
			for (const auto &t : polys[i].terms())
				m.at((int)i, col[t.m.key]) = CoeffFrac(t.c);
		sb.pivots = rref(m);
		sb.rrefm = std::move(m);
		return sb;
	}

	int dim() const { return (int)pivots.size(); }

	// clear eps-denominators row-wise so basis polynomials stay in Q[eps]
	MPoly row_poly(int k, int arity) const
	{
		Coeff lcm(1);
		for (int q = 0; q < rrefm.cols; ++q) {
			const Coeff &den = rrefm.at(k, q).den();
			if (!den.is_rational()) {
				Coeff g = poly_gcd(lcm, den);
				lcm = lcm * poly_divexact(den, g);
			}
		}
		MPoly p(arity);
		for (int q = 0; q < rrefm.cols; ++q) {
			CoeffFrac v = rrefm.at(k, q) * CoeffFrac(lcm);
			if (!v.is_zero())
				p.add_term(mons[q], v.to_coeff());
		}
		return p;
	}

	// coordinates of p in the row basis; nullopt when p is outside the span
	std::optional<std::vector<CoeffFrac>> coords(const MPoly &p,
	                                             const std::vector<MPoly> &basis) const
	{
		std::vector<std::vector<CoeffFrac>> rows;
		std::map<Mono::Key, int> col;
		std::vector<Mono::Key> keys;
		auto touch = [&](const MPoly &q) {
			for (const auto &t : q.terms())
				if (col.emplace(t.m.key, 0).second)
					keys.push_back(t.m.key);
		};
		for (const auto &b : basis)
			touch(b);
		touch(p);
		std::sort(keys.begin(), keys.end());
		for (size_t i = 0; i < keys.size(); ++i)
			col[keys[i]] = (int)i;
		for (const auto &b : basis) {
			std::vector<CoeffFrac> row(keys.size());
			for (const auto &t : b.terms())
				row[col[t.m.key]] = CoeffFrac(t.c);
			rows.push_back(std::move(row));
		}
		std::vector<CoeffFrac> target(keys.size());
		for (const auto &t : p.terms())
			target[col[t.m.key]] = CoeffFrac(t.c);
		return solve_row_combination(rows, target);
	}
};

std::vector<Coeff> frac_to_coeff_vec(const std::vector<CoeffFrac> &v, const char *what)
{
	std::vector<Coeff> out;
	out.reserve(v.size());
	for (const auto &x : v) {
		try {
			out.push_back(x.to_coeff());
		} catch (const Error &) {
			fail(std::string(what) + ": eps-generic fraction has no polynomial form");
		}
	}
	return out;
}

std::vector<CoeffFrac> flatten_pair(const std::pair<VectorField, VectorField> &pair,
                                    const std::vector<std::pair<int, Mono>> &coords,
                                    int n)
{
	std::vector<CoeffFrac> v;
	v.reserve(2 * coords.size());
	for (int side = 0; side < 2; ++side) {
		const VectorField &f = side ? pair.second : pair.first;
		for (const auto &[c, m] : coords)
			v.push_back(CoeffFrac(f.comps[c].coeff(m)));
	}
	return v;
}

} // namespace

LieAction CBCST::rho_ga_action() const
{
	LieAction act;
	act.source = &g;
	act.target = &a;
	act.target_dim = a.dim();
	act.by_derivations = true;
	act.mats = rho_ga;
	return act;
}

LieAlgebra CBCST::make_semidirect() const
{
	LieAction act = rho_ga_action();
	return semidirect(a, g, act);
}

CBCST CBCST::specialize_eps(const Rat &value) const
{
	CBCST c;
	c.n = n;
	c.a = a.specialize_eps(value);
	c.g = g.specialize_eps(value);
	for (const auto &m : rho_ga) {
		FMatrix s(m.rows, m.cols);
		for (int i = 0; i < m.rows; ++i)
			for (int j = 0; j < m.cols; ++j)
				s.at(i, j) = CoeffFrac(m.at(i, j).to_coeff().specialize_eps(value));
		c.rho_ga.push_back(std::move(s));
	}
	c.pi = FMatrix(pi.rows, pi.cols);
	for (int i = 0; i < pi.rows; ++i)
		for (int j = 0; j < pi.cols; ++j)
			c.pi.at(i, j) = CoeffFrac(pi.at(i, j).to_coeff().specialize_eps(value));
	for (const auto &f : rho_aX)
		c.rho_aX.push_back(f.specialize_eps(value));
	for (const auto &f : rho_gX)
		c.rho_gX.push_back(f.specialize_eps(value));
	for (const auto &p : psi)
		c.psi.push_back(p.specialize_eps(value));
	return c;
}

VectorField CBCST::rho_second(int j) const
{
	VectorField f = rho_gX[j];
	for (int i = 0; i < a.dim(); ++i)
		if (!pi.at(i, j).is_zero())
			f = f + rho_aX[i].scale(pi.at(i, j).to_coeff());
	return f;
}

std::vector<Coeff> CBCSTBuilder::star(int c, int e) const
{
	int d = dim();
	std::vector<Coeff> out(d);
	for (size_t i = 0; i < acoef.size(); ++i) {
		if (acoef[i][c].is_zero())
			continue;
		for (int k = 0; k < d; ++k)
			out[k] += acoef[i][c] * a_act[i][k][e];
	}
	return out;
}

std::vector<Coeff> CBCSTBuilder::circ(int c, int e) const
{
	int d = dim();
	std::vector<Coeff> out(d);
	for (size_t j = 0; j < bcoef.size(); ++j) {
		if (bcoef[j][e].is_zero())
			continue;
		for (int k = 0; k < d; ++k)
			out[k] += bcoef[j][e] * b_act[j][k][c];
	}
	return out;
}

std::pair<VectorField, VectorField> CBCSTBuilder::p_pair(const std::vector<Coeff> &x) const
{
	int n = r.n;
	VectorField neg(n), pos(n);
	for (size_t i = 0; i < r.a_terms.size(); ++i) {
		Coeff v;
		for (int c = 0; c < dim(); ++c)
			v += acoef[i][c] * x[c];
		if (!v.is_zero())
			neg = neg - r.a_terms[i].first.scale(v);
	}
	for (size_t j = 0; j < r.b_terms.size(); ++j) {
		Coeff v;
		for (int c = 0; c < dim(); ++c)
			v += bcoef[j][c] * x[c];
		if (!v.is_zero())
			pos = pos + r.b_terms[j].second.scale(v);
	}
	return {neg, pos};
}

FromRMatrix from_rmatrix(const GeomRMatrix &input)
{
	FromRMatrix out;
	CBCSTBuilder &b = out.builder;
	b.r = minimize(input);
	const GeomRMatrix &r = b.r;
	int n = r.n;

	Report cy = check_cybe(r);
	if (!cy.pass())
		fail("from_rmatrix: input does not satisfy the CYBE (" + cy.first_failure() + ")");

	// V = V1 + V2, canonical echelon basis
	std::vector<MPoly> vpolys;
	for (const auto &[vf, fn] : r.a_terms)
		vpolys.push_back(fn);
	for (const auto &[fn, vf] : r.b_terms)
		vpolys.push_back(fn);
	require(!vpolys.empty(), "from_rmatrix: r has no terms; a has dimension zero");
	SpanBasis sb = SpanBasis::of(vpolys);
	int d = sb.dim();
	for (int k = 0; k < d; ++k)
		b.fbasis.push_back(sb.row_poly(k, n));

	auto expand = [&](const MPoly &p, const char *what) {
		auto c = sb.coords(p, b.fbasis);
		if (!c)
			fail(std::string("from_rmatrix: ") + what + " is outside V1+V2: " +
			     p.to_string(n));
		return frac_to_coeff_vec(*c, what);
	};
	for (const auto &[vf, fn] : r.a_terms)
		b.acoef.push_back(expand(fn, "a0 function"));
	for (const auto &[fn, vf] : r.b_terms)
		b.bcoef.push_back(expand(fn, "b0 function"));
	for (const auto &[vf, fn] : r.a_terms) {
		std::vector<std::vector<Coeff>> row;
		for (int k = 0; k < d; ++k)
			row.push_back(expand(vf_apply(vf, b.fbasis[k]), "a1.f action value"));
		b.a_act.push_back(std::move(row));
	}
	for (const auto &[fn, vf] : r.b_terms) {
		std::vector<std::vector<Coeff>> row;
		for (int k = 0; k < d; ++k)
			row.push_back(expand(vf_apply(vf, b.fbasis[k]), "b1.f action value"));
		b.b_act.push_back(std::move(row));
	}

	// p on the dual basis; injectivity of p|_a
	std::vector<std::pair<VectorField, VectorField>> gpairs;
	for (int c = 0; c < d; ++c) {
		std::vector<Coeff> delta(d);
		delta[c] = Coeff(1);
		gpairs.push_back(b.p_pair(delta));
	}
	std::vector<std::pair<int, Mono>> vcoords;
	{
		std::map<std::pair<int, Mono::Key>, Mono> seen;
		for (const auto &[u, v] : gpairs)
			for (int c = 0; c < n; ++c) {
				for (const auto &t : u.comps[c].terms())
					seen.emplace(std::make_pair(c, t.m.key), t.m);
				for (const auto &t : v.comps[c].terms())
					seen.emplace(std::make_pair(c, t.m.key), t.m);
			}
		for (const auto &[k, m] : seen)
			vcoords.emplace_back(k.first, m);
	}
	std::vector<std::vector<CoeffFrac>> grows;
	for (const auto &gp : gpairs)
		grows.push_back(flatten_pair(gp, vcoords, n));
	{
		FMatrix M((int)grows[0].size(), d);
		for (int j = 0; j < d; ++j)
			for (int i = 0; i < M.rows; ++i)
				M.at(i, j) = grows[j][i];
		if (auto ker = kernel_vector(M)) {
			std::ostringstream os;
			os << "from_rmatrix: p is not injective on a; kernel witness (";
			for (int j = 0; j < d; ++j)
				os << (j ? ", " : "") << (*ker)[j].num().to_string() << "/"
				   << (*ker)[j].den().to_string();
			os << ") in the dual basis";
			fail(os.str());
		}
	}

	CBCST &c = out.cbcst;
	c.n = n;
	// a with the eq:lsa bracket
	std::vector<std::string> alabels;
	for (int k = 0; k < d; ++k)
		alabels.push_back("d" + std::to_string(k + 1));
	c.a = LieAlgebra(d, alabels);
	for (int ci = 0; ci < d; ++ci)
		for (int ce = ci + 1; ce < d; ++ce) {
			std::vector<Coeff> br(d);
			for (int k = 0; k < d; ++k) {
				Coeff t;
				for (size_t i = 0; i < b.acoef.size(); ++i)
					t += b.acoef[i][ce] * b.a_act[i][k][ci];
				for (size_t j = 0; j < b.bcoef.size(); ++j)
					t += b.bcoef[j][ce] * b.b_act[j][k][ci];
				br[k] = t;
			}
			c.a.set_bracket(ci, ce, br);
		}
	// g on the basis p(delta_c); structure constants solved in that basis
	std::vector<std::string> glabels;
	for (int k = 0; k < d; ++k)
		glabels.push_back("g" + std::to_string(k + 1));
	c.g = LieAlgebra(d, glabels);
	for (int ci = 0; ci < d; ++ci)
		for (int ce = ci + 1; ce < d; ++ce) {
			std::pair<VectorField, VectorField> br{
			    vf_bracket(gpairs[ci].first, gpairs[ce].first),
			    vf_bracket(gpairs[ci].second, gpairs[ce].second)};
			auto sol = solve_row_combination(grows, flatten_pair(br, vcoords, n));
			if (!sol)
				fail("from_rmatrix: [g,g] left the image of p at basis pair (" +
				     std::to_string(ci + 1) + "," + std::to_string(ce + 1) + ")");
			c.g.set_bracket(ci, ce, frac_to_coeff_vec(*sol, "g structure constants"));
		}
	// pi = identity in these bases
	c.pi = FMatrix::identity(d);
	// rho_ga: star action of g basis elements
	for (int e = 0; e < d; ++e) {
		FMatrix m(d, d);
		for (int k = 0; k < d; ++k)
			for (int t = 0; t < d; ++t) {
				Coeff v;
				for (size_t i = 0; i < b.acoef.size(); ++i)
					v += b.acoef[i][e] * b.a_act[i][k][t];
				m.at(k, t) = CoeffFrac(v);
			}
		c.rho_ga.push_back(std::move(m));
	}
	// rho_gaX fields
	for (int ci = 0; ci < d; ++ci) {
		VectorField fa(n);
		for (size_t i = 0; i < b.acoef.size(); ++i)
			if (!b.acoef[i][ci].is_zero())
				fa = fa + r.a_terms[i].first.scale(b.acoef[i][ci]);
		for (size_t j = 0; j < b.bcoef.size(); ++j)
			if (!b.bcoef[j][ci].is_zero())
				fa = fa + r.b_terms[j].second.scale(b.bcoef[j][ci]);
		c.rho_aX.push_back(std::move(fa));
		VectorField fg(n);
		for (size_t i = 0; i < b.acoef.size(); ++i)
			if (!b.acoef[i][ci].is_zero())
				fg = fg - r.a_terms[i].first.scale(b.acoef[i][ci]);
		c.rho_gX.push_back(std::move(fg));
	}
	c.psi = b.fbasis;
	return out;
}

GeomRMatrix to_rmatrix(const CBCST &c)
{
	Report v = validate(c);
	if (!v.pass())
		fail("to_rmatrix: CBCST fails validation (" + v.first_failure() + ")");
	auto piinv = inverse(c.pi);
	require(piinv.has_value(), "to_rmatrix: pi is not invertible");
	int d = c.a.dim();
	GeomRMatrix r(c.n);
	for (int idx = 0; idx < d; ++idx) {
		// alpha: rho(0, -pi^{-1} delta_idx) (x) psi_idx
		VectorField w(c.n);
		for (int e = 0; e < c.g.dim(); ++e)
			if (!piinv->at(e, idx).is_zero())
				w = w - c.rho_gX[e].scale(piinv->at(e, idx).to_coeff());
		if (!w.is_zero())
			r.a_terms.emplace_back(std::move(w), c.psi[idx]);
		// beta: psi_idx (x) rho(delta_idx, pi^{-1} delta_idx)
		VectorField u = c.rho_aX[idx];
		for (int e = 0; e < c.g.dim(); ++e)
			if (!piinv->at(e, idx).is_zero())
				u = u + c.rho_gX[e].scale(piinv->at(e, idx).to_coeff());
		if (!u.is_zero())
			r.b_terms.emplace_back(c.psi[idx], std::move(u));
	}
	return minimize(r);
}

Report validate(const CBCST &c)
{
	Report rep;
	rep.merge(c.a.check_jacobi(), "a.");
	rep.merge(c.g.check_jacobi(), "g.");
	LieAction act = c.rho_ga_action();
	rep.merge(act.check_homomorphism(), "rho_ga.");
	rep.merge(act.check_derivation(), "rho_ga.");
	LieCocycle pi{&c.g, &c.a, &act, c.pi};
	rep.merge(pi.check_cocycle(), "pi.");

	// rho_gaX: Lie algebra homomorphism from a x| g into Vect(X)
	{
		bool ok = true;
		std::string witness;
		LieAlgebra sd = c.make_semidirect();
		std::vector<VectorField> fields = c.rho_aX;
		fields.insert(fields.end(), c.rho_gX.begin(), c.rho_gX.end());
		int D = sd.dim();
		auto as_field = [&](const std::vector<Coeff> &coords) {
			VectorField f(c.n);
			for (int k = 0; k < D; ++k)
				if (!coords[k].is_zero())
					f = f + fields[k].scale(coords[k]);
			return f;
		};
		for (int i = 0; i < D && ok; ++i)
			for (int j = i + 1; j < D; ++j) {
				VectorField lhs = as_field(sd.bracket_basis(i, j));
				VectorField rhs = vf_bracket(fields[i], fields[j]);
				if (!(lhs == rhs)) {
					// diagnose a pure sign-convention mismatch
					bool mirrored = (as_field(sd.bracket_basis(j, i)) == rhs);
					ok = false;
					witness = "semidirect basis pair (" + std::to_string(i + 1) + "," +
					          std::to_string(j + 1) + ")" +
					          (mirrored ? "; holds with flipped bracket order "
					                      "(sign-convention mismatch suspected)"
					                    : "");
					break;
				}
			}
		rep.add("rho_gax.homomorphism", ok, witness);
	}

	// Psi equivariance: Psi_* rho(a,g) = -[a, Psi] - rho_ga(g) Psi
	{
		bool ok = true;
		std::string witness;
		int d = c.a.dim();
		for (int m = 0; m < d + c.g.dim() && ok; ++m) {
			bool is_a = m < d;
			const VectorField &fld = is_a ? c.rho_aX[m] : c.rho_gX[m - d];
			for (int comp = 0; comp < d; ++comp) {
				MPoly lhs = vf_apply(fld, c.psi[comp]);
				MPoly rhs(c.n);
				if (is_a) {
					for (int e = 0; e < d; ++e) {
						auto br = c.a.bracket_basis(m, e);
						if (!br[comp].is_zero())
							rhs -= c.psi[e].scale(br[comp]);
					}
				} else {
					for (int e = 0; e < d; ++e) {
						const CoeffFrac &v = c.rho_ga[m - d].at(comp, e);
						if (!v.is_zero())
							rhs -= c.psi[e].scale(v.to_coeff());
					}
				}
				if (!(lhs == rhs)) {
					ok = false;
					witness = std::string(is_a ? "a" : "g") + "-basis element " +
					          std::to_string((is_a ? m : m - d) + 1) + ", component " +
					          std::to_string(comp + 1) + ", residual " +
					          (lhs - rhs).to_string(c.n);
					break;
				}
			}
		}
		rep.add("psi.equivariance", ok, witness);
	}

	// generation: Lie closure of the span of Psi's coefficient vectors is a
	{
		int d = c.a.dim();
		std::map<Mono::Key, int> mons;
		for (const auto &p : c.psi)
			for (const auto &t : p.terms())
				mons.emplace(t.m.key, (int)mons.size());
		std::vector<std::vector<CoeffFrac>> vecs;
		for (const auto &[key, idx] : mons) {
			std::vector<CoeffFrac> v(d);
			Mono m;
			m.key = key;
			for (int comp = 0; comp < d; ++comp)
				v[comp] = CoeffFrac(c.psi[comp].coeff(m));
			vecs.push_back(std::move(v));
		}
		auto span_rank = [&](const std::vector<std::vector<CoeffFrac>> &vs) {
			FMatrix m((int)vs.size(), d);
			for (size_t i = 0; i < vs.size(); ++i)
				for (int j = 0; j < d; ++j)
					m.at((int)i, j) = vs[i][j];
			return rank(m);
		};
		int rk = span_rank(vecs);
		bool grew = true;
		while (rk < d && grew) {
			grew = false;
			size_t sz = vecs.size();
			for (size_t i = 0; i < sz && !grew; ++i)
				for (size_t j = 0; j < sz; ++j) {
					auto br = c.a.bracket(vecs[i], vecs[j]);
					vecs.push_back(br);
					int rk2 = span_rank(vecs);
					if (rk2 > rk) {
						rk = rk2;
						grew = true;
						break;
					}
					vecs.pop_back();
				}
		}
		rep.add("psi.generation", rk == d,
		        rk == d ? "" : "Lie closure of Psi coefficients has dimension " +
		                           std::to_string(rk) + " < " + std::to_string(d));
	}

	// faithfulness of g -> Vect(X) x Vect(X)
	{
		int dg = c.g.dim();
		std::map<std::pair<int, Mono::Key>, Mono> seen;
		std::vector<std::pair<VectorField, VectorField>> pairs;
		for (int j = 0; j < dg; ++j) {
			pairs.emplace_back(c.rho_gX[j], c.rho_second(j));
			for (int side = 0; side < 2; ++side) {
				const VectorField &f = side ? pairs.back().second : pairs.back().first;
				for (int comp = 0; comp < c.n; ++comp)
					for (const auto &t : f.comps[comp].terms())
						seen.emplace(std::make_pair(comp, t.m.key), t.m);
			}
		}
		std::vector<std::pair<int, Mono>> coords;
		for (const auto &[k, m] : seen)
			coords.emplace_back(k.first, m);
		FMatrix M(2 * (int)coords.size(), dg);
		for (int j = 0; j < dg; ++j) {
			auto flat = flatten_pair(pairs[j], coords, c.n);
			for (size_t i = 0; i < flat.size(); ++i)
				M.at((int)i, j) = flat[i];
		}
		auto ker = kernel_vector(M);
		rep.add("faithfulness", !ker.has_value(),
		        ker ? "kernel element in the g basis" : "");
	}
	return rep;
}

Report CBCSTBuilder::check_proof_identities(const CBCST &c) const
{
	Report rep;
	int d = dim();
	int n = r.n;

	// g1, g2 are Lie subalgebras; g1.V1 etc. span invariances
	{
		std::vector<MPoly> v1, v2, v12;
		for (const auto &[vf, fn] : r.a_terms)
			v1.push_back(fn);
		for (const auto &[fn, vf] : r.b_terms)
			v2.push_back(fn);
		v12 = v1;
		v12.insert(v12.end(), v2.begin(), v2.end());
		auto in_span = [&](const std::vector<MPoly> &span, const MPoly &p) {
			if (p.is_zero())
				return true;
			if (span.empty())
				return false;
			SpanBasis sb = SpanBasis::of(span);
			std::vector<MPoly> basis;
			for (int k = 0; k < sb.dim(); ++k)
				basis.push_back(sb.row_poly(k, n));
			return sb.coords(p, basis).has_value();
		};
		auto fields_of_a = [&]() {
			std::vector<VectorField> fs;
			for (const auto &[vf, fn] : r.a_terms)
				fs.push_back(vf);
			return fs;
		};
		auto fields_of_b = [&]() {
			std::vector<VectorField> fs;
			for (const auto &[fn, vf] : r.b_terms)
				fs.push_back(vf);
			return fs;
		};
		auto field_in_span = [&](const std::vector<VectorField> &span, const VectorField &f) {
			if (f.is_zero())
				return true;
			std::map<std::pair<int, Mono::Key>, Mono> seen;
			for (const auto &g : span)
				for (int comp = 0; comp < n; ++comp)
					for (const auto &t : g.comps[comp].terms())
						seen.emplace(std::make_pair(comp, t.m.key), t.m);
			for (int comp = 0; comp < n; ++comp)
				for (const auto &t : f.comps[comp].terms())
					seen.emplace(std::make_pair(comp, t.m.key), t.m);
			std::vector<std::pair<int, Mono>> coords;
			for (const auto &[k, m] : seen)
				coords.emplace_back(k.first, m);
			std::vector<std::vector<CoeffFrac>> rows;
			for (const auto &g : span) {
				std::vector<CoeffFrac> row;
				for (const auto &[comp, m] : coords)
					row.push_back(CoeffFrac(g.comps[comp].coeff(m)));
				rows.push_back(std::move(row));
			}
			std::vector<CoeffFrac> target;
			for (const auto &[comp, m] : coords)
				target.push_back(CoeffFrac(f.comps[comp].coeff(m)));
			return solve_row_combination(rows, target).has_value();
		};
		bool g1_closed = true, g2_closed = true, inv_ok = true;
		auto fa = fields_of_a(), fb = fields_of_b();
		for (size_t i = 0; i < fa.size() && g1_closed; ++i)
			for (size_t j = i + 1; j < fa.size(); ++j)
				if (!field_in_span(fa, vf_bracket(fa[i], fa[j]))) {
					g1_closed = false;
					break;
				}
		for (size_t i = 0; i < fb.size() && g2_closed; ++i)
			for (size_t j = i + 1; j < fb.size(); ++j)
				if (!field_in_span(fb, vf_bracket(fb[i], fb[j]))) {
					g2_closed = false;
					break;
				}
		for (const auto &[vf, fn] : r.a_terms) {
			for (const auto &[vf2, fn2] : r.a_terms)
				if (!in_span(v12, vf_apply(vf, fn2)))
					inv_ok = false; // g1 . V1 subset V1+V2
			for (const auto &[fn2, vf2] : r.b_terms)
				if (!in_span(v2, vf_apply(vf, fn2)))
					inv_ok = false; // g1 . V2 subset V2
		}
		for (const auto &[fn, vf] : r.b_terms) {
			for (const auto &[vf2, fn2] : r.a_terms)
				if (!in_span(v1, vf_apply(vf, fn2)))
					inv_ok = false; // g2 . V1 subset V1
			for (const auto &[fn2, vf2] : r.b_terms)
				if (!in_span(v12, vf_apply(vf, fn2)))
					inv_ok = false; // g2 . V2 subset V1+V2
		}
		rep.add("spans.g1_subalgebra", g1_closed);
		rep.add("spans.g2_subalgebra", g2_closed);
		rep.add("spans.invariance", inv_ok);
	}

	auto add_vecs = [&](std::vector<Coeff> a, const std::vector<Coeff> &b) {
		for (size_t i = 0; i < a.size(); ++i)
			a[i] += b[i];
		return a;
	};
	auto eqv = [&](const std::vector<Coeff> &a, const std::vector<Coeff> &b) {
		return a == b;
	};

	// eq:sryb  [x,y] = x circ y + y star x on dual-basis pairs
	{
		bool ok = true;
		std::string witness;
		for (int x = 0; x < d && ok; ++x)
			for (int y = 0; y < d; ++y) {
				auto lhs = c.a.bracket_basis(x, y);
				auto rhs = add_vecs(circ(x, y), star(y, x));
				if (!eqv(lhs, rhs)) {
					ok = false;
					witness = "pair (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
					break;
				}
			}
		rep.add("eq_sryb", ok, witness);
	}

	// eq:fryb  [p(x),p(y)] = p(x star y) + p(x circ y) as pairs of fields
	{
		bool ok = true;
		std::string witness;
		for (int x = 0; x < d && ok; ++x)
			for (int y = 0; y < d; ++y) {
				std::vector<Coeff> dx(d), dy(d);
				dx[x] = Coeff(1);
				dy[y] = Coeff(1);
				auto px = p_pair(dx), py = p_pair(dy);
				std::pair<VectorField, VectorField> lhs{vf_bracket(px.first, py.first),
				                                        vf_bracket(px.second, py.second)};
				auto rhs1 = p_pair(star(x, y));
				auto rhs2 = p_pair(circ(x, y));
				if (!(lhs.first == rhs1.first + rhs2.first) ||
				    !(lhs.second == rhs1.second + rhs2.second)) {
					ok = false;
					witness = "pair (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
					break;
				}
			}
		rep.add("eq_fryb", ok, witness);
	}

	// eq:et, the eight-term identity, on all dual-basis triples (x,y,z)
	{
		bool ok = true;
		std::string witness;
		auto starv = [&](const std::vector<Coeff> &u, const std::vector<Coeff> &v) {
			std::vector<Coeff> out(d);
			for (int x = 0; x < d; ++x) {
				if (u[x].is_zero())
					continue;
				for (int y = 0; y < d; ++y) {
					if (v[y].is_zero())
						continue;
					auto s = star(x, y);
					for (int k = 0; k < d; ++k)
						out[k] += u[x] * v[y] * s[k];
				}
			}
			return out;
		};
		// pi[p(u),p(v)] in the dual basis: g-basis is p(dual), pi = id, so this
		// is just the g structure constants contracted with u, v.
		auto pibr = [&](const std::vector<Coeff> &u, const std::vector<Coeff> &v) {
			return c.g.bracket(u, v);
		};
		for (int z = 0; z < d && ok; ++z)
			for (int y = 0; y < d && ok; ++y)
				for (int x = 0; x < d; ++x) {
					std::vector<Coeff> ez(d), ey(d), ex(d);
					ez[z] = Coeff(1);
					ey[y] = Coeff(1);
					ex[x] = Coeff(1);
					auto zy = starv(ez, ey);
					auto zx = starv(ez, ex);
					auto yx = starv(ey, ex);
					std::vector<Coeff> acc(d);
					auto addsgn = [&](const std::vector<Coeff> &v, long s) {
						for (int k = 0; k < d; ++k)
							acc[k] += v[k] * Coeff(s);
					};
					addsgn(pibr(zy, ex), 1);
					addsgn(starv(zy, ex), -1);
					addsgn(starv(ez, pibr(ey, ex)), -1);
					addsgn(starv(ez, yx), 1);
					addsgn(starv(pibr(ez, ex), ey), -1);
					addsgn(starv(zx, ey), 1);
					addsgn(pibr(ey, zx), 1);
					addsgn(starv(ey, zx), -1);
					bool zero = true;
					for (const auto &v : acc)
						if (!v.is_zero())
							zero = false;
					if (!zero) {
						ok = false;
						witness = "triple (" + std::to_string(x + 1) + "," +
						          std::to_string(y + 1) + "," + std::to_string(z + 1) + ")";
						break;
					}
				}
		rep.add("eq_et", ok, witness);
	}
	return rep;
}

IsoWitness cbcst_isomorphism(const CBCST &c1, const CBCST &c2)
{
	IsoWitness w;
	if (c1.n != c2.n || c1.a.dim() != c2.a.dim() || c1.g.dim() != c2.g.dim()) {
		w.detail = "dimension mismatch";
		return w;
	}
	int d = c1.a.dim();
	// phi_a: a1 -> a2 determined by Psi1 = phi_a^T ... concretely we need
	// Psi2 components to expand Psi1: Psi1_c = sum_e M[c][e] Psi2_e gives the
	// matrix of the dual change; phi_a maps delta1_c to sum M[c][e] delta2_e.
	SpanBasis sb = SpanBasis::of(c2.psi);
	if (sb.dim() != d) {
		w.detail = "Psi2 components are dependent";
		return w;
	}
	FMatrix M(d, d);
	for (int c = 0; c < d; ++c) {
		auto coords = sb.coords(c1.psi[c], c2.psi);
		if (!coords) {
			w.detail = "Psi1 component outside span of Psi2 components";
			return w;
		}
		for (int e = 0; e < d; ++e)
			M.at(c, e) = (*coords)[e];
	}
	// phi_a as a matrix taking coordinates in basis delta1 to basis delta2:
	// phi_a(delta1_c) = sum_e M[c][e] delta2_e  ->  matrix columns
	FMatrix phi_a(d, d);
	for (int c = 0; c < d; ++c)
		for (int e = 0; e < d; ++e)
			phi_a.at(e, c) = M.at(c, e);
	if (!inverse(phi_a)) {
		w.detail = "derived phi_a is singular";
		return w;
	}
	// check phi_a is a Lie isomorphism
	auto column = [&](const FMatrix &m, int j) {
		std::vector<CoeffFrac> v(m.rows);
		for (int i = 0; i < m.rows; ++i)
			v[i] = m.at(i, j);
		return v;
	};
	auto apply = [&](const FMatrix &m, const std::vector<CoeffFrac> &v) {
		std::vector<CoeffFrac> out(m.rows);
		for (int i = 0; i < m.rows; ++i)
			for (int j = 0; j < m.cols; ++j)
				if (!m.at(i, j).is_zero() && !v[j].is_zero())
					out[i] = out[i] + m.at(i, j) * v[j];
		return out;
	};
	for (int i = 0; i < d; ++i)
		for (int j = i + 1; j < d; ++j) {
			auto br1 = c1.a.bracket_basis(i, j);
			std::vector<CoeffFrac> br1f(br1.begin(), br1.end());
			auto lhs = apply(phi_a, br1f);
			auto rhs = c2.a.bracket(column(phi_a, i), column(phi_a, j));
			if (!(lhs == rhs)) {
				w.detail = "phi_a does not intertwine the a brackets";
				return w;
			}
		}
	// phi_g = pi2^{-1} phi_a pi1; must intertwine g brackets, pi, rho
	auto pi2inv = inverse(c2.pi);
	if (!pi2inv) {
		w.detail = "pi2 not invertible";
		return w;
	}
	auto matmul = [&](const FMatrix &A, const FMatrix &B) {
		FMatrix r(A.rows, B.cols);
		for (int i = 0; i < A.rows; ++i)
			for (int k = 0; k < A.cols; ++k)
				if (!A.at(i, k).is_zero())
					for (int j = 0; j < B.cols; ++j)
						r.at(i, j) = r.at(i, j) + A.at(i, k) * B.at(k, j);
		return r;
	};
	FMatrix phi_g = matmul(matmul(*pi2inv, phi_a), c1.pi);
	for (int i = 0; i < d; ++i)
		for (int j = i + 1; j < d; ++j) {
			auto br1 = c1.g.bracket_basis(i, j);
			std::vector<CoeffFrac> br1f(br1.begin(), br1.end());
			auto lhs = apply(phi_g, br1f);
			auto rhs = c2.g.bracket(column(phi_g, i), column(phi_g, j));
			if (!(lhs == rhs)) {
				w.detail = "phi_g does not intertwine the g brackets";
				return w;
			}
		}
	// rho intertwining: rho2(phi_g e_j) phi_a = phi_a rho1(e_j)
	for (int j = 0; j < d; ++j) {
		FMatrix rho2(d, d);
		for (int e = 0; e < d; ++e)
			if (!phi_g.at(e, j).is_zero())
				for (size_t t = 0; t < rho2.a.size(); ++t)
					rho2.a[t] = rho2.a[t] + phi_g.at(e, j) * c2.rho_ga[e].a[t];
		FMatrix lhs = matmul(rho2, phi_a);
		FMatrix rhs = matmul(phi_a, c1.rho_ga[j]);
		for (size_t t = 0; t < lhs.a.size(); ++t)
			if (!(lhs.a[t] == rhs.a[t])) {
				w.detail = "phi does not intertwine rho_ga";
				return w;
			}
	}
	w.valid = true;
	w.phi_a = phi_a;
	w.phi_g = phi_g;
	return w;
}

} // namespace ybgeo
