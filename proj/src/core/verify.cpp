#include "core/verify.hpp"

#include "core/expr.hpp"

namespace ybgeo {

HSeries grouplog_component(const GroupLog &u, int basis_index)
{
	HSeries s(u.coeff_arity, u.order);
	for (int m = 0; m <= u.order; ++m)
		s.at(m) = u.comp[m][basis_index];
	return s;
}

Report match_closed_forms(const RMatrixQ &R, const ClosedForms &cf)
{
	Report rep;
	require((int)cf.star.size() == R.n && (int)cf.circ.size() == R.n,
	        "closed forms: one expression per coordinate required");
	for (int i = 0; i < R.n; ++i) {
		HSeries want = expand_expr(cf.star[i], R.order, 2 * R.n, R.n);
		bool ok = R.star[i] == want;
		rep.add("closed_form.star" + std::to_string(i + 1), ok,
		        ok ? "" : "first mismatch at h^" +
		                      std::to_string((R.star[i] - want).valuation()));
	}
	for (int i = 0; i < R.n; ++i) {
		HSeries want = expand_expr(cf.circ[i], R.order, 2 * R.n, R.n);
		bool ok = R.circ[i] == want;
		rep.add("closed_form.circ" + std::to_string(i + 1), ok,
		        ok ? "" : "first mismatch at h^" +
		                      std::to_string((R.circ[i] - want).valuation()));
	}
	return rep;
}

namespace {

// derived subalgebra span; returns (dimension, central?)
std::pair<int, bool> derived_subalgebra(const LieAlgebra &L)
{
	int d = L.dim();
	std::vector<std::vector<CoeffFrac>> rows;
	for (int i = 0; i < d; ++i)
		for (int j = i + 1; j < d; ++j) {
			auto v = L.bracket_basis(i, j);
			std::vector<CoeffFrac> row(v.begin(), v.end());
			rows.push_back(std::move(row));
		}
	FMatrix m((int)rows.size(), d);
	for (size_t i = 0; i < rows.size(); ++i)
		for (int j = 0; j < d; ++j)
			m.at((int)i, j) = rows[i][j];
	std::vector<int> piv = rref(m);
	int dim = (int)piv.size();
	// central: bracket of every echelon-row generator with every basis vanishes
	bool central = true;
	for (int k = 0; k < dim && central; ++k) {
		std::vector<Coeff> gen(d);
		for (int j = 0; j < d; ++j)
			gen[j] = m.at(k, j).to_coeff();
		for (int b = 0; b < d && central; ++b) {
			std::vector<Coeff> basis(d);
			basis[b] = Coeff(1);
			auto br = L.bracket(gen, basis);
			for (const auto &x : br)
				if (!x.is_zero())
					central = false;
		}
	}
	return {dim, central};
}

void verify_at_eps(Report &rep, const GeomRMatrix &r_eps, const std::string &tag,
                   int order, const std::optional<ClosedForms> &forms)
{
	Report cy = check_cybe(r_eps);
	rep.merge(cy, "cybe." + tag + ".");
	if (!cy.pass())
		return; // everything downstream presupposes the CYBE
	FromRMatrix fr = from_rmatrix(r_eps);
	Report val = validate(fr.cbcst);
	rep.add("validate." + tag, val.pass(), val.first_failure());
	rep.merge(fr.builder.check_proof_identities(fr.cbcst), "proof." + tag + ".");
	RMatrixQ R = quantize(fr.cbcst, order);
	if (forms)
		rep.merge(match_closed_forms(R, *forms), tag + ".");
	rep.merge(check_braid(R), "braid." + tag + ".");
	rep.merge(check_classical_limit(R, r_eps), tag + ".");
	rep.merge(check_first_order(R, fr.builder, fr.cbcst), tag + ".");
	bool classical_unitary = check_unitarity(r_eps);
	bool abelian = fr.cbcst.a.is_abelian();
	rep.add("unitarity." + tag + ".classical_iff_abelian", classical_unitary == abelian);
	bool quantum_unitary = check_quantum_unitarity(R);
	rep.add("unitarity." + tag + ".quantum_iff_abelian", quantum_unitary == abelian);
	// round trips
	GeomRMatrix rt = to_rmatrix(fr.cbcst);
	rep.add("roundtrip." + tag + ".rmatrix", minimize(rt).equals(minimize(r_eps)));
	FromRMatrix fr2 = from_rmatrix(rt);
	IsoWitness iso = cbcst_isomorphism(fr2.cbcst, fr.cbcst);
	rep.add("roundtrip." + tag + ".cbcst_isomorphism", iso.valid, iso.detail);
}

} // namespace

Report verify_example5(int order, const std::optional<Rat> &eps, bool corrupt)
{
	require(order >= 2, "verify-example5: order must be at least 2");
	Report rep;
	GeomRMatrix r = example5::rmatrix();
	if (corrupt) {
		// negative control: flip the sign of one b-term coefficient
		r.b_terms[1].first = r.b_terms[1].first.scale(Coeff(-1L));
	}

	if (eps) {
		GeomRMatrix re = r.specialize_eps(*eps);
		std::optional<ClosedForms> forms;
		if (*eps == 1)
			forms = example5::closed_forms_eps1();
		else if (*eps == 0)
			forms = example5::closed_forms_eps0();
		verify_at_eps(rep, re, "eps=" + rat_to_string(*eps), order, forms);
		return rep;
	}

	// symbolic family: CYBE at symbolic eps plus both endpoints in full
	Report cy = check_cybe(r);
	rep.merge(cy, "cybe.symbolic.");
	if (!cy.pass())
		return rep;

	// structure recovery at symbolic eps
	{
		FromRMatrix fr = from_rmatrix(r);
		rep.add("structure.dim_a", fr.cbcst.a.dim() == 3);
		rep.add("structure.dim_g", fr.cbcst.g.dim() == 3);
		auto [ddim, central] = derived_subalgebra(fr.cbcst.a.specialize_eps(Rat(1)));
		rep.add("structure.heisenberg_eps1", ddim == 1 && central,
		        "derived subalgebra dim " + std::to_string(ddim));
		rep.add("structure.abelian_eps0",
		        fr.cbcst.a.specialize_eps(Rat(0)).is_abelian());
		CBCST pres = example5::presentation_cbcst();
		IsoWitness iso = cbcst_isomorphism(fr.cbcst, pres);
		bool basis_change_ok = false;
		if (iso.valid) {
			FMatrix want = example5::presentation_basis_change();
			basis_change_ok = true;
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					basis_change_ok =
					    basis_change_ok && iso.phi_g.at(i, j) == want.at(i, j);
		}
		rep.add("structure.pi_presentation", iso.valid && basis_change_ok,
		        iso.valid ? (basis_change_ok ? "" : "unexpected basis change")
		                  : iso.detail);
		Report val = validate(pres);
		rep.add("validate.presentation", val.pass(), val.first_failure());
	}

	// inverse group cocycle against the paper's p, q, r (eps = 1)
	{
		CBCST pres = example5::presentation_cbcst().specialize_eps(Rat(1));
		QuantumTuple qt = make_quantum(pres, order);
		GroupLog w(pres.a, order, 3);
		for (int k = 0; k < 3; ++k)
			w.comp[1][k] = MPoly::var(3, k);
		GroupLog u = qt.pi_tilde_inverse(w);
		HSeries p_got = grouplog_component(u, 0);
		HSeries q_got = grouplog_component(u, 1);
		HSeries r_got = grouplog_component(u, 2);
		rep.add("cocycle.p",
		        p_got == expand_expr(example5::p_closed_form(), order, 3, 3));
		rep.add("cocycle.q", q_got == example5::q_closed_form(order));
		rep.add("cocycle.r",
		        r_got == expand_expr(example5::r_closed_form(), order, 3, 3));
		// the literal defining identity of q: q * D = numerator
		HSeries lhs = q_got * expand_expr(example5::q_denominator(), order, 3, 3);
		rep.add("cocycle.q_product_identity",
		        lhs == expand_expr(example5::q_numerator(), order, 3, 3));
		// round trip through the forward cocycle
		rep.add("cocycle.roundtrip", qt.pi_tilde(u) == w);
	}

	verify_at_eps(rep, r.specialize_eps(Rat(1)), "eps1", order,
	              example5::closed_forms_eps1());
	verify_at_eps(rep, r.specialize_eps(Rat(0)), "eps0", order,
	              example5::closed_forms_eps0());

	// the dichotomy stated explicitly
	{
		bool u0 = false, u1 = false;
		for (const auto &it : rep.items) {
			if (it.name == "unitarity.eps0.quantum_iff_abelian")
				u0 = it.pass;
			if (it.name == "unitarity.eps1.quantum_iff_abelian")
				u1 = it.pass;
		}
		rep.add("unitarity.dichotomy", u0 && u1);
	}
	return rep;
}

} // namespace ybgeo
