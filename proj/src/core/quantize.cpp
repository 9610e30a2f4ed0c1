#include "core/quantize.hpp"

#include <sstream>

namespace ybgeo {

FormalDiffeo RMatrixQ::as_diffeo() const
{
	FormalDiffeo f;
	f.arity = 2 * n;
	f.order = order;
	f.images = star;
	f.images.insert(f.images.end(), circ.begin(), circ.end());
	return f;
}

namespace {

// h * Psi evaluated on coordinate images: an a-valued graded log whose
// MPoly coefficients live in the images' ring
GroupLog psi_log(const CBCST &c, const std::vector<HSeries> &imgs, int N)
{
	int arity = imgs[0].arity();
	GroupLog w(c.a, N, arity);
	for (int comp = 0; comp < c.a.dim(); ++comp) {
		HSeries val = mpoly_subst(c.psi[comp], imgs);
		for (int m = N; m >= 1; --m)
			w.comp[m][comp] = val.at(m - 1);
	}
	return w;
}

// rho applied to a graded log, realized as an h-vector field differentiating
// the block at `offset` of a total_arity-dimensional ambient space
HVectorField rho_field(const CBCST &c, const GroupLog *a_log, const GroupLog *g_log,
                       int total_arity, int offset)
{
	int N = a_log ? a_log->order : g_log->order;
	HVectorField f(total_arity, N);
	auto accumulate = [&](const GroupLog &log, const std::vector<VectorField> &fields) {
		for (int m = 1; m <= N; ++m)
			for (size_t idx = 0; idx < log.comp[m].size(); ++idx) {
				const MPoly &coef = log.comp[m][idx];
				if (coef.is_zero())
					continue;
				for (int k = 0; k < c.n; ++k) {
					const MPoly &fc = fields[idx].comps[k];
					if (fc.is_zero())
						continue;
					f.comps[offset + k].at(m) += coef * fc.embed(total_arity, offset);
				}
			}
	};
	if (a_log)
		accumulate(*a_log, c.rho_aX);
	if (g_log)
		accumulate(*g_log, c.rho_gX);
	return f;
}

std::vector<HSeries> identity_images(int arity, int N)
{
	std::vector<HSeries> v;
	for (int i = 0; i < arity; ++i)
		v.push_back(HSeries::var(arity, N, i));
	return v;
}

HSeries drop_third_block(const HSeries &s, int n)
{
	// verify independence of the active block, then restrict to arity 2n
	std::vector<int> map(3 * n);
	for (int i = 0; i < 2 * n; ++i)
		map[i] = i;
	for (int m = 0; m <= s.order(); ++m)
		for (const auto &t : s.at(m).terms())
			for (int i = 2 * n; i < 3 * n; ++i)
				require(t.m.exp(i) == 0, "quantize: residual active-block dependence");
	for (int i = 2 * n; i < 3 * n; ++i)
		map[i] = 0; // unused by construction
	return s.remap(2 * n, map);
}

} // namespace

GroupLog QuantumTuple::pi_tilde(const GroupLog &g_log) const
{
	LieAction act = c.rho_ga_action();
	LieCocycle pi{&c.g, &c.a, &act, c.pi};
	LieAlgebra sd = c.make_semidirect();
	return cocycle_exponentiate(pi, sd, g_log);
}

GroupLog QuantumTuple::pi_tilde_inverse(const GroupLog &a_log) const
{
	LieAction act = c.rho_ga_action();
	LieCocycle pi{&c.g, &c.a, &act, c.pi};
	LieAlgebra sd = c.make_semidirect();
	return cocycle_invert(pi, sd, a_log);
}

// exponentiated rho_ga action of e^u on an a-log: apply exp(sum rho(u_m) h^m)
static GroupLog exp_action(const CBCST &c, const GroupLog &u, const GroupLog &b)
{
	int N = b.order;
	GroupLog result = b;
	GroupLog term = b;
	Rat fact(1);
	for (int k = 1; k <= N; ++k) {
		// term <- rho(u) term  (graded composition)
		GroupLog next(*b.alg, N, b.coeff_arity);
		for (int mu = 1; mu <= N; ++mu)
			for (int i = 0; i < c.g.dim(); ++i) {
				const MPoly &cu = u.comp[mu][i];
				if (cu.is_zero())
					continue;
				for (int mb = 1; mu + mb <= N; ++mb)
					for (int jb = 0; jb < c.a.dim(); ++jb) {
						const MPoly &cb = term.comp[mb][jb];
						if (cb.is_zero())
							continue;
						for (int t = 0; t < c.a.dim(); ++t) {
							const CoeffFrac &m = c.rho_ga[i].at(t, jb);
							if (!m.is_zero())
								next.comp[mu + mb][t] += (cu * cb).scale(m.to_coeff());
						}
					}
			}
		term = std::move(next);
		if (term.is_zero())
			break;
		fact *= k;
		for (int m = 1; m <= N; ++m)
			for (int t = 0; t < c.a.dim(); ++t)
				if (!term.comp[m][t].is_zero())
					result.comp[m][t] += term.comp[m][t].scale(Coeff(Rat(1) / fact));
	}
	return result;
}

Report QuantumTuple::check_group_cocycle_law(const GroupLog &u, const GroupLog &v) const
{
	Report rep;
	GroupLog lhs = pi_tilde(bch(u, v));
	GroupLog rhs = bch(pi_tilde(u), exp_action(c, u, pi_tilde(v)));
	rep.add("group_cocycle_law", lhs == rhs);
	return rep;
}

Report QuantumTuple::check_psi_tilde_equivariance() const
{
	Report rep;
	int d = c.a.dim(), dg = c.g.dim(), N = order;
	LieAlgebra sd = c.make_semidirect();
	bool ok = true;
	std::string witness;
	for (int idx = 0; idx < d + dg && ok; ++idx) {
		// w = h * basis element of a x| g
		GroupLog w(sd, N, c.n);
		w.comp[1][idx] = MPoly::constant(c.n, Coeff(1));
		GroupLog wa(c.a, N, c.n), wg(c.g, N, c.n);
		if (idx < d)
			wa.comp[1][idx] = MPoly::constant(c.n, Coeff(1));
		else
			wg.comp[1][idx - d] = MPoly::constant(c.n, Coeff(1));
		// point map of e^w on X
		HVectorField f = rho_field(c, &wa, &wg, c.n, 0);
		FormalDiffeo P = flow(-f);
		// LHS: log of Psi~ at the moved point
		GroupLog lhs = psi_log(c, P.images, N);
		// RHS: (a-part, g-part) acting on Psi~(x) by conj . exponentiated rho:
		// factor e^w = (a~, e^{wg}); then  a~ * (wg |> b) * a~^{-1}
		GroupLog atilde(c.a, N, c.n);
		{
			GroupLog mg(sd, N, c.n);
			mg.comp[1][idx] = MPoly::constant(c.n, Coeff(1));
			if (idx >= d) {
				GroupLog neg(sd, N, c.n);
				neg.comp[1][idx] = MPoly::constant(c.n, Coeff(-1L));
				GroupLog res = bch(mg, neg);
				for (int m = 1; m <= N; ++m)
					for (int t = 0; t < d; ++t)
						atilde.comp[m][t] = res.comp[m][t];
			} else {
				atilde.comp[1][idx] = MPoly::constant(c.n, Coeff(1));
			}
		}
		GroupLog b = psi_log(c, identity_images(c.n, N), N);
		GroupLog acted = exp_action(c, wg, b);
		GroupLog rhs = bch(atilde, bch(acted, -atilde));
		if (!(lhs == rhs)) {
			ok = false;
			witness = "semidirect basis element " + std::to_string(idx + 1);
		}
	}
	rep.add("psi_tilde.equivariance", ok, witness);
	return rep;
}

QuantumTuple make_quantum(const CBCST &c, int N)
{
	require(N >= 2, "quantize: order must be at least 2 for the classical-limit check");
	Report v = validate(c);
	if (!v.pass())
		fail("quantize: CBCST fails validation (" + v.first_failure() + ")");
	return QuantumTuple{c, N};
}

RMatrixQ quantize(const QuantumTuple &q)
{
	const CBCST &c = q.c;
	int n = c.n, N = q.order;
	LieAction act = c.rho_ga_action();
	LieCocycle pi{&c.g, &c.a, &act, c.pi};
	LieAlgebra sd = c.make_semidirect();

	RMatrixQ R;
	R.n = n;
	R.order = N;

	// ---- star part on X^2: active block x, parameters y ----
	{
		std::vector<HSeries> y_imgs;
		for (int i = 0; i < n; ++i)
			y_imgs.push_back(HSeries::var(2 * n, N, n + i));
		GroupLog w = psi_log(c, y_imgs, N); // h Psi(y)
		GroupLog u = cocycle_invert(pi, sd, -w);
		HVectorField f = rho_field(c, nullptr, &u, 2 * n, 0);
		FormalDiffeo st = flow(-f);
		for (int i = 0; i < n; ++i)
			R.star.push_back(st.images[i]);
		for (int i = 0; i < n; ++i)
			require(st.images[n + i] == HSeries::var(2 * n, N, n + i),
			        "quantize: star flow moved the y block");
	}

	// ---- circ part on X^3: blocks x, y, active u ----
	{
		int m3 = 3 * n;
		std::vector<HSeries> s3;
		for (const auto &s : R.star)
			s3.push_back(s.embed(m3, 0));
		GroupLog w = psi_log(c, s3, N); // h Psi(x *(y)) with (x,y) parameters
		HVectorField sf = rho_field(c, &w, nullptr, m3, 2 * n);
		FormalDiffeo S = flow(-sf);
		GroupLog ug = cocycle_invert(pi, sd, -w);
		HVectorField tf = rho_field(c, nullptr, &ug, m3, 2 * n);
		// inverse action as the flow of the non-negated log; assert it agrees
		// with the diffeo inverse of the action itself
		FormalDiffeo Tinv = flow(tf);
		{
			FormalDiffeo T = flow(-tf);
			FormalDiffeo comp = compose(T, Tinv);
			require(comp.is_identity(),
			        "quantize: inverse-action flow does not invert the action");
		}
		// S applied to the point y: substitute u := y in the active images
		std::vector<HSeries> u_to_y = identity_images(m3, N);
		for (int i = 0; i < n; ++i)
			u_to_y[2 * n + i] = HSeries::var(m3, N, n + i);
		std::vector<HSeries> Sy = u_to_y;
		for (int i = 0; i < n; ++i)
			Sy[2 * n + i] = S.images[2 * n + i].subst(u_to_y);
		for (int i = 0; i < n; ++i) {
			HSeries circ3 = Tinv.images[2 * n + i].subst(Sy);
			R.circ.push_back(drop_third_block(circ3, n));
		}
	}
	return R;
}

RMatrixQ quantize(const CBCST &c, int N) { return quantize(make_quantum(c, N)); }

namespace {

FormalDiffeo swap_xy(int n, int N)
{
	FormalDiffeo f;
	f.arity = 2 * n;
	f.order = N;
	for (int i = 0; i < 2 * n; ++i)
		f.images.push_back(HSeries::var(2 * n, N, (i + n) % (2 * n)));
	return f;
}

void locate_discrepancy(Report &rep, const char *name, const FormalDiffeo &lhs,
                        const FormalDiffeo &rhs, int block_width)
{
	int worst_order = -1, worst_coord = -1;
	for (int i = 0; i < lhs.arity; ++i) {
		HSeries d = lhs.images[i] - rhs.images[i];
		int v = d.valuation();
		if (v <= d.order() && (worst_order < 0 || v < worst_order)) {
			worst_order = v;
			worst_coord = i;
		}
	}
	if (worst_order < 0) {
		rep.add(name, true);
	} else {
		std::ostringstream os;
		os << "first discrepancy at h^" << worst_order << ", coordinate "
		   << var_name(worst_coord, block_width);
		rep.add(name, false, os.str());
	}
}

} // namespace

Report check_braid(const RMatrixQ &R, bool flip_variant)
{
	Report rep;
	int n = R.n, N = R.order;
	FormalDiffeo D = R.as_diffeo();
	if (!flip_variant) {
		FormalDiffeo R12 = place(D, n, 1, 2, 3);
		FormalDiffeo R13 = place(D, n, 1, 3, 3);
		FormalDiffeo R23 = place(D, n, 2, 3, 3);
		// operator product acts rightmost first: R12 R13 R23 (p) = R12(R13(R23 p))
		FormalDiffeo lhs = compose(compose(R23, R13), R12);
		FormalDiffeo rhs = compose(compose(R12, R13), R23);
		locate_discrepancy(rep, "braid", lhs, rhs, n);
	} else {
		// sigma.R on adjacent factors: B12 B23 B12 = B23 B12 B23
		FormalDiffeo B = compose(D, swap_xy(n, N));
		FormalDiffeo B12 = place(B, n, 1, 2, 3);
		FormalDiffeo B23 = place(B, n, 2, 3, 3);
		FormalDiffeo lhs = compose(compose(B12, B23), B12);
		FormalDiffeo rhs = compose(compose(B23, B12), B23);
		locate_discrepancy(rep, "braid.flip_variant", lhs, rhs, n);
	}
	return rep;
}

VectorField classical_limit_field(const RMatrixQ &R)
{
	VectorField v(2 * R.n);
	for (int i = 0; i < R.n; ++i) {
		v.comps[i] = -R.star[i].at(1);
		v.comps[R.n + i] = -R.circ[i].at(1);
	}
	return v;
}

Report check_classical_limit(const RMatrixQ &R, const GeomRMatrix &r)
{
	Report rep;
	bool shape = true;
	for (int i = 0; i < R.n; ++i)
		shape = shape && R.star[i].at(0) == MPoly::var(2 * R.n, i) &&
		        R.circ[i].at(0) == MPoly::var(2 * R.n, R.n + i);
	rep.add("classical_limit.identity_mod_h", shape);
	VectorField got = classical_limit_field(R);
	VectorField want = as_field_on_square(r);
	bool ok = got == want;
	std::string witness;
	if (!ok) {
		for (int i = 0; i < 2 * R.n; ++i)
			if (!(got.comps[i] == want.comps[i])) {
				witness = "coordinate " + var_name(i, R.n) + ": got " +
				          got.comps[i].to_string(R.n) + ", expected " +
				          want.comps[i].to_string(R.n);
				break;
			}
	}
	rep.add("classical_limit.matches_r", ok, witness);
	return rep;
}

Report quantum_unitarity_report(const RMatrixQ &R)
{
	Report rep;
	int n = R.n, N = R.order;
	FormalDiffeo D = R.as_diffeo();
	FormalDiffeo sw = swap_xy(n, N);
	FormalDiffeo R21 = compose(compose(sw, D), sw);
	FormalDiffeo comp = compose(D, R21); // R first, then R21
	locate_discrepancy(rep, "quantum_unitarity", comp, FormalDiffeo::identity(2 * n, N), n);
	return rep;
}

bool check_quantum_unitarity(const RMatrixQ &R) { return quantum_unitarity_report(R).pass(); }

Report check_rack_case(const GeomRMatrix &r, int N)
{
	Report rep;
	require(r.a_terms.empty(), "check_rack_case: r has a-terms");
	Report cy = check_cybe(r);
	rep.merge(cy, "rack.");
	if (!cy.pass())
		return rep;
	FromRMatrix fr = from_rmatrix(r);
	RMatrixQ R = quantize(fr.cbcst, N);
	bool idx = true;
	for (int i = 0; i < r.n; ++i)
		idx = idx && R.star[i] == HSeries::var(2 * r.n, N, i);
	rep.add("rack.star_identity", idx);
	rep.merge(check_braid(R), "rack.");
	return rep;
}

Report check_first_order(const RMatrixQ &R, const CBCSTBuilder &b, const CBCST &c)
{
	Report rep;
	int n = R.n, d = c.a.dim();
	int m2 = 2 * n;
	// Psi-pushforward of the h^1 star field must equal -(Psi(y) star Psi(x)),
	// and of the h^1 circ field -(Psi(y) circ Psi(x)), as a-valued polynomials
	// on X^2 expanded over dual-basis contractions.
	bool ok_star = true, ok_circ = true;
	for (int k = 0; k < d; ++k) {
		MPoly lhs_star(m2), lhs_circ(m2);
		for (int i = 0; i < n; ++i) {
			lhs_star += R.star[i].at(1) * c.psi[k].embed(m2, 0).diff(i);
			lhs_circ += R.circ[i].at(1) * c.psi[k].embed(m2, n).diff(n + i);
		}
		MPoly rhs_star(m2), rhs_circ(m2);
		for (int ci = 0; ci < d; ++ci)
			for (int ce = 0; ce < d; ++ce) {
				MPoly prod_s = c.psi[ci].embed(m2, n) * c.psi[ce].embed(m2, 0);
				const Coeff &sv = b.star(ci, ce)[k];
				if (!sv.is_zero())
					rhs_star -= prod_s.scale(sv);
				MPoly prod_c = c.psi[ci].embed(m2, n) * c.psi[ce].embed(m2, 0);
				const Coeff &cv = b.circ(ci, ce)[k];
				if (!cv.is_zero())
					rhs_circ -= prod_c.scale(cv);
			}
		ok_star = ok_star && lhs_star == rhs_star;
		ok_circ = ok_circ && lhs_circ == rhs_circ;
	}
	rep.add("first_order.star", ok_star);
	rep.add("first_order.circ", ok_circ);
	return rep;
}

} // namespace ybgeo
