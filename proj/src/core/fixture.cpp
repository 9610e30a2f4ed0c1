#include "core/fixture.hpp"

#include "core/expr.hpp"

namespace ybgeo {
namespace example5 {

const char *kRMatrixJson = R"({
  "dimension": 3,
  "parameters": ["eps"],
  "a_terms": [
    {"vf": ["-1/2*eps*x1 + x2", "0", "-1/2*eps*x3"], "fn": "x1"},
    {"vf": ["-x1", "x2", "0"], "fn": "x2"},
    {"vf": ["x1", "0", "x3"], "fn": "x3"}
  ],
  "b_terms": [
    {"fn": "x1", "vf": ["1/2*eps*x1 - x2", "0", "-eps*x2 + 1/2*eps*x3"]},
    {"fn": "x2", "vf": ["x1", "-x2", "eps*x1"]},
    {"fn": "x3", "vf": ["-x1", "0", "-x3"]}
  ]
})";

GeomRMatrix rmatrix() { return rmatrix_from_json(parse_json_text(kRMatrixJson)); }

CBCST presentation_cbcst()
{
	CBCST c;
	c.n = 3;
	Coeff eps = Coeff::eps();
	Coeff half(1, 2);

	c.a = LieAlgebra(3, {"X", "Y", "C"});
	c.a.set_bracket(0, 1, {Coeff(), Coeff(), eps});

	c.g = LieAlgebra(3, {"Ep", "Eq", "Er"});
	c.g.set_bracket(0, 1, {Coeff(), Coeff(1), Coeff()});
	c.g.set_bracket(1, 2, {Coeff(), Coeff(1), Coeff()});

	auto mat = [](std::vector<std::vector<Coeff>> rows) {
		FMatrix m((int)rows.size(), (int)rows[0].size());
		for (int i = 0; i < m.rows; ++i)
			for (int j = 0; j < m.cols; ++j)
				m.at(i, j) = CoeffFrac(rows[i][j]);
		return m;
	};
	Coeff z, o(1);
	c.rho_ga.push_back(mat({{o, z, z}, {z, z, z}, {z, z, o}}));
	c.rho_ga.push_back(mat({{z, o, z}, {z, z, z}, {z, z, z}}));
	c.rho_ga.push_back(mat({{z, z, z}, {z, o, z}, {z, z, o}}));
	c.pi = mat({{z, o, z}, {z, z, o}, {o, eps * half, o}});

	auto vf = [](const char *c1, const char *c2, const char *c3) {
		VectorField f(3);
		f.comps[0] = parse_mpoly(c1, 3);
		f.comps[1] = parse_mpoly(c2, 3);
		f.comps[2] = parse_mpoly(c3, 3);
		return f;
	};
	c.rho_aX.push_back(vf("0", "0", "-eps*x2"));
	c.rho_aX.push_back(vf("0", "0", "eps*x1"));
	c.rho_aX.push_back(vf("0", "0", "0"));
	c.rho_gX.push_back(vf("-x1", "0", "-x3"));
	c.rho_gX.push_back(vf("-x2", "0", "0"));
	c.rho_gX.push_back(vf("0", "-x2", "-x3"));
	c.psi = {MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2)};
	return c;
}

FMatrix presentation_basis_change()
{
	// columns: from_rmatrix basis elements g_c = p(delta_c) in the E basis
	Coeff eps = Coeff::eps();
	FMatrix m(3, 3);
	m.at(0, 0) = CoeffFrac(-(eps * Coeff(1, 2)));
	m.at(1, 0) = CoeffFrac(Coeff(1));
	m.at(0, 1) = CoeffFrac(Coeff(-1L));
	m.at(2, 1) = CoeffFrac(Coeff(1));
	m.at(0, 2) = CoeffFrac(Coeff(1));
	return m;
}

ClosedForms closed_forms_eps1()
{
	ClosedForms cf;
	const char *den = "((1 - h*y2)*(1 - 1/2*h^2*y1*x2)"
	                  " + h*(1 - h*y3 + 1/2*h*y1)*(-x3 + 1/2*x1 + h*x3*y2))";
	cf.star = {
	    "((1 - h*y3 + 1/2*h*y1)/(1 - h*y2))*x1 - h*y1*x2",
	    "(1 - h*y2)*x2",
	    "(1 - h*y3 + 1/2*h*y1)*x3",
	};
	cf.circ = {
	    std::string("(y1*(1 - h*x2) + h*y2*(x1 - y1 + h*y1*x2 - h*x1*y3 + 1/2*h*x1*y1)) / ") + den,
	    "y2/(1 - h*x2 + h^2*x2*y2)",
	    std::string("((1 - h*y2)*(y3 - h*y1*x2) + h*y2*x1*(1 - h*y3 + 1/2*h*y1)) / ") + den,
	};
	return cf;
}

ClosedForms closed_forms_eps0()
{
	ClosedForms cf;
	cf.star = {
	    "((1 - h*y3)/(1 - h*y2))*x1 - h*y1*x2",
	    "(1 - h*y2)*x2",
	    "(1 - h*y3)*x3",
	};
	cf.circ = {
	    "y1*(1 - h*x2)/(1 - h*x3 + h^2*x3*y3)"
	    " + h*y2*x1*(1 - h*y3)/((1 - h*x3 + h^2*x3*y3)*(1 - h*y2))",
	    "y2/(1 - h*x2 + h^2*x2*y2)",
	    "y3/(1 - h*x3 + h^2*x3*y3)",
	};
	return cf;
}

std::string p_closed_form() { return "ln((1 + h*x3 - 1/2*h*x1)/(1 + h*x2))"; }
std::string r_closed_form() { return "ln(1 + h*x2)"; }

HSeries q_closed_form(int order)
{
	// q = (h a /(1+h b)) * sum_k (-1)^k w^k/(k+1),
	// w = (1 + h c - h a/2)/(1 + h b)^2 - 1; equivalent to the literal
	// formula, whose divisor has positive h-valuation.
	int N = order;
	HSeries w = expand_expr("(1 + h*x3 - 1/2*h*x1)/((1 + h*x2)^2) - 1", N, 3, 3);
	HSeries acc = HSeries::constant(3, N, Coeff(1));
	HSeries pw = acc;
	for (int k = 1; k <= N; ++k) {
		pw = pw * (-w);
		acc += pw.scale(Coeff(1, k + 1));
	}
	return expand_expr("h*x1/(1 + h*x2)", N, 3, 3) * acc;
}

std::string q_denominator() { return "(1 + h*x3 - 1/2*h*x1) - (1 + h*x2)^2"; }
std::string q_numerator()
{
	return "h*x1*(1 + h*x2)*ln((1 + h*x3 - 1/2*h*x1)/((1 + h*x2)^2))";
}

GeomRMatrix rack_rmatrix()
{
	GeomRMatrix r(3);
	VectorField a2(3);
	a2.comps[0] = parse_mpoly("-x1", 3);
	a2.comps[1] = parse_mpoly("x2", 3);
	r.b_terms.emplace_back(MPoly::var(3, 2), a2);
	return r;
}

} // namespace example5
} // namespace ybgeo
