#include "core/io.hpp"

#include "core/expr.hpp"
#include <sstream>

namespace ybgeo {

json parse_json_text(const std::string &text)
{
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded())
		fail("invalid JSON input");
	return j;
}

static bool rmatrix_uses_eps(const GeomRMatrix &r)
{
	auto poly_eps = [](const MPoly &p) {
		for (const auto &t : p.terms())
			if (t.c.eps_degree() > 0)
				return true;
		return false;
	};
	for (const auto &[vf, fn] : r.a_terms) {
		if (poly_eps(fn))
			return true;
		for (const auto &c : vf.comps)
			if (poly_eps(c))
				return true;
	}
	for (const auto &[fn, vf] : r.b_terms) {
		if (poly_eps(fn))
			return true;
		for (const auto &c : vf.comps)
			if (poly_eps(c))
				return true;
	}
	return false;
}

json rmatrix_to_json(const GeomRMatrix &r)
{
	json j;
	j["dimension"] = r.n;
	j["parameters"] = rmatrix_uses_eps(r) ? json::array({"eps"}) : json::array();
	json aterms = json::array();
	for (const auto &[vf, fn] : r.a_terms) {
		json vfj = json::array();
		for (const auto &c : vf.comps)
			vfj.push_back(c.to_string(r.n));
		aterms.push_back({{"vf", vfj}, {"fn", fn.to_string(r.n)}});
	}
	j["a_terms"] = aterms;
	json bterms = json::array();
	for (const auto &[fn, vf] : r.b_terms) {
		json vfj = json::array();
		for (const auto &c : vf.comps)
			vfj.push_back(c.to_string(r.n));
		bterms.push_back({{"fn", fn.to_string(r.n)}, {"vf", vfj}});
	}
	j["b_terms"] = bterms;
	return j;
}

GeomRMatrix rmatrix_from_json(const json &j)
{
	require(j.is_object(), "r-matrix file: expected a JSON object");
	require(j.contains("dimension") && j["dimension"].is_number_integer(),
	        "r-matrix file: missing integer 'dimension'");
	int n = j["dimension"].get<int>();
	require(n >= 1 && n <= Mono::kMaxVars / 3,
	        "r-matrix file: dimension out of supported range");
	if (j.contains("parameters"))
		for (const auto &p : j["parameters"])
			require(p.get<std::string>() == "eps",
			        "r-matrix file: unknown parameter (only 'eps' is supported)");
	GeomRMatrix r(n);
	auto parse_vf = [&](const json &vfj) {
		require(vfj.is_array() && (int)vfj.size() == n,
		        "r-matrix file: vector field needs one component per coordinate");
		VectorField vf(n);
		for (int c = 0; c < n; ++c)
			vf.comps[c] = parse_mpoly(vfj[c].get<std::string>(), n, n);
		return vf;
	};
	if (j.contains("a_terms"))
		for (const auto &t : j["a_terms"])
			r.a_terms.emplace_back(parse_vf(t.at("vf")),
			                       parse_mpoly(t.at("fn").get<std::string>(), n, n));
	if (j.contains("b_terms"))
		for (const auto &t : j["b_terms"])
			r.b_terms.emplace_back(parse_mpoly(t.at("fn").get<std::string>(), n, n),
			                       parse_vf(t.at("vf")));
	return r;
}

json lie_to_json(const LieAlgebra &L)
{
	json j;
	j["dim"] = L.dim();
	j["labels"] = L.labels();
	json brs = json::array();
	for (int i = 0; i < L.dim(); ++i)
		for (int k = i + 1; k < L.dim(); ++k) {
			auto v = L.bracket_basis(i, k);
			bool nz = false;
			for (const auto &c : v)
				nz = nz || !c.is_zero();
			if (!nz)
				continue;
			json coeffs = json::array();
			for (const auto &c : v)
				coeffs.push_back(c.to_string());
			brs.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", coeffs}});
		}
	j["brackets"] = brs;
	return j;
}

LieAlgebra lie_from_json(const json &j)
{
	int dim = j.at("dim").get<int>();
	std::vector<std::string> labels;
	if (j.contains("labels"))
		labels = j["labels"].get<std::vector<std::string>>();
	LieAlgebra L(dim, labels);
	if (j.contains("brackets"))
		for (const auto &b : j["brackets"]) {
			int i = b.at("i").get<int>() - 1;
			int k = b.at("j").get<int>() - 1;
			std::vector<Coeff> coeffs;
			for (const auto &c : b.at("coeffs"))
				coeffs.push_back(parse_coeff(c.get<std::string>()));
			L.set_bracket(i, k, coeffs);
		}
	return L;
}

static json matrix_to_json(const FMatrix &m)
{
	json rows = json::array();
	for (int i = 0; i < m.rows; ++i) {
		json row = json::array();
		for (int k = 0; k < m.cols; ++k)
			row.push_back(m.at(i, k).to_coeff().to_string());
		rows.push_back(row);
	}
	return rows;
}

static FMatrix matrix_from_json(const json &j)
{
	int rows = (int)j.size();
	int cols = rows ? (int)j[0].size() : 0;
	FMatrix m(rows, cols);
	for (int i = 0; i < rows; ++i) {
		require((int)j[i].size() == cols, "matrix rows have unequal lengths");
		for (int k = 0; k < cols; ++k)
			m.at(i, k) = CoeffFrac(parse_coeff(j[i][k].get<std::string>()));
	}
	return m;
}

static json fields_to_json(const std::vector<VectorField> &fs, int n)
{
	json out = json::array();
	for (const auto &f : fs) {
		json comps = json::array();
		for (const auto &c : f.comps)
			comps.push_back(c.to_string(n));
		out.push_back(comps);
	}
	return out;
}

static std::vector<VectorField> fields_from_json(const json &j, int n)
{
	std::vector<VectorField> out;
	for (const auto &fj : j) {
		require((int)fj.size() == n, "vector field component count mismatch");
		VectorField f(n);
		for (int c = 0; c < n; ++c)
			f.comps[c] = parse_mpoly(fj[c].get<std::string>(), n, n);
		out.push_back(std::move(f));
	}
	return out;
}

json cbcst_to_json(const CBCST &c)
{
	json j;
	j["schema"] = "ybgeo.cbcst/1";
	j["dimension"] = c.n;
	j["a"] = lie_to_json(c.a);
	j["g"] = lie_to_json(c.g);
	json rho = json::array();
	for (const auto &m : c.rho_ga)
		rho.push_back(matrix_to_json(m));
	j["rho_ga"] = rho;
	j["pi"] = matrix_to_json(c.pi);
	j["rho_aX"] = fields_to_json(c.rho_aX, c.n);
	j["rho_gX"] = fields_to_json(c.rho_gX, c.n);
	json psi = json::array();
	for (const auto &p : c.psi)
		psi.push_back(p.to_string(c.n));
	j["psi"] = psi;
	return j;
}

CBCST cbcst_from_json(const json &j)
{
	CBCST c;
	c.n = j.at("dimension").get<int>();
	require(c.n >= 1 && c.n <= Mono::kMaxVars / 3, "cbcst file: dimension out of range");
	c.a = lie_from_json(j.at("a"));
	c.g = lie_from_json(j.at("g"));
	for (const auto &m : j.at("rho_ga"))
		c.rho_ga.push_back(matrix_from_json(m));
	require((int)c.rho_ga.size() == c.g.dim(), "cbcst file: rho_ga count mismatch");
	c.pi = matrix_from_json(j.at("pi"));
	require(c.pi.rows == c.a.dim() && c.pi.cols == c.g.dim(),
	        "cbcst file: pi shape mismatch");
	c.rho_aX = fields_from_json(j.at("rho_aX"), c.n);
	c.rho_gX = fields_from_json(j.at("rho_gX"), c.n);
	require((int)c.rho_aX.size() == c.a.dim() && (int)c.rho_gX.size() == c.g.dim(),
	        "cbcst file: rho_gaX field count mismatch");
	for (const auto &p : j.at("psi"))
		c.psi.push_back(parse_mpoly(p.get<std::string>(), c.n, c.n));
	require((int)c.psi.size() == c.a.dim(), "cbcst file: psi component count mismatch");
	return c;
}

json rseries_to_json(const RMatrixQ &R)
{
	json j;
	j["schema"] = "ybgeo.rseries/1";
	j["dimension"] = R.n;
	j["order"] = R.order;
	auto block = [&](const std::vector<HSeries> &part) {
		json out = json::array();
		for (const auto &s : part) {
			json coord = json::array();
			for (int m = 0; m <= s.order(); ++m)
				if (!s.at(m).is_zero())
					coord.push_back(json::array({m, s.at(m).to_string(R.n)}));
			out.push_back(coord);
		}
		return out;
	};
	j["star"] = block(R.star);
	j["circ"] = block(R.circ);
	return j;
}

ClosedForms closed_forms_from_json(const json &j)
{
	ClosedForms cf;
	for (const auto &s : j.at("star"))
		cf.star.push_back(s.get<std::string>());
	for (const auto &s : j.at("circ"))
		cf.circ.push_back(s.get<std::string>());
	return cf;
}

json report_to_json(const Report &rep, const std::string &command, const std::string &error)
{
	json j;
	j["schema"] = "ybgeo.report/1";
	j["command"] = command;
	j["verdict"] = !error.empty() ? "error" : (rep.pass() ? "pass" : "fail");
	if (!error.empty())
		j["error"] = error;
	json items = json::array();
	for (const auto &it : rep.items) {
		json itj;
		itj["name"] = it.name;
		itj["pass"] = it.pass;
		if (!it.witness.empty())
			itj["witness"] = it.witness;
		items.push_back(itj);
	}
	j["items"] = items;
	return j;
}

std::string report_to_human(const Report &rep, const std::string &command,
                            const std::string &error)
{
	std::ostringstream os;
	if (!error.empty()) {
		os << command << ": error: " << error << "\n";
		return os.str();
	}
	for (const auto &it : rep.items) {
		os << (it.pass ? "  ok   " : "  FAIL ") << it.name;
		if (!it.witness.empty())
			os << "  (" << it.witness << ")";
		os << "\n";
	}
	os << command << ": " << (rep.pass() ? "pass" : "FAIL") << "\n";
	return os.str();
}

} // namespace ybgeo
