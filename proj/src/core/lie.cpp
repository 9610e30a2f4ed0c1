#include "core/lie.hpp"

#include <map>
#include <sstream>

namespace ybgeo {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_((size_t)dim * dim)
{
	require(dim >= 0, "LieAlgebra: negative dimension");
	if (labels_.empty())
		for (int i = 0; i < dim; ++i)
			labels_.push_back("e" + std::to_string(i + 1));
	require((int)labels_.size() == dim, "LieAlgebra: label count mismatch");
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, {}); }

void LieAlgebra::set_bracket(int i, int j, std::vector<Coeff> coeffs)
{
	require(0 <= i && i < j && j < dim_, "LieAlgebra: bracket indices must satisfy i < j");
	require((int)coeffs.size() == dim_, "LieAlgebra: bracket coefficient count mismatch");
	c_[pair_index(i, j)] = std::move(coeffs);
}

std::vector<Coeff> LieAlgebra::bracket_basis(int i, int j) const
{
	std::vector<Coeff> out(dim_);
	if (i == j)
		return out;
	bool flip = i > j;
	if (flip)
		std::swap(i, j);
	const auto &v = c_[pair_index(i, j)];
	if (v.empty())
		return out;
	for (int k = 0; k < dim_; ++k)
		out[k] = flip ? -v[k] : v[k];
	return out;
}

template <class V> V LieAlgebra::bracket(const V &u, const V &v) const
{
	V out(dim_);
	for (int i = 0; i < dim_; ++i)
		for (int j = 0; j < dim_; ++j) {
			auto cb = bracket_basis(i, j);
			for (int k = 0; k < dim_; ++k)
				if (!cb[k].is_zero())
					out[k] = out[k] + u[i] * v[j] * cb[k];
		}
	return out;
}

LieAlgebra LieAlgebra::specialize_eps(const Rat &value) const
{
	LieAlgebra out(dim_, labels_);
	for (int i = 0; i < dim_; ++i)
		for (int j = i + 1; j < dim_; ++j) {
			const auto &v = c_[pair_index(i, j)];
			if (v.empty())
				continue;
			std::vector<Coeff> w(dim_);
			for (int k = 0; k < dim_; ++k)
				w[k] = v[k].specialize_eps(value);
			out.set_bracket(i, j, std::move(w));
		}
	return out;
}

bool LieAlgebra::is_abelian() const
{
	for (const auto &v : c_)
		for (const auto &x : v)
			if (!x.is_zero())
				return false;
	return true;
}

static std::string coeff_vec_str(const std::vector<Coeff> &v)
{
	std::ostringstream os;
	os << "(";
	for (size_t i = 0; i < v.size(); ++i)
		os << (i ? ", " : "") << v[i].to_string();
	os << ")";
	return os.str();
}

Report LieAlgebra::check_jacobi() const
{
	Report rep;
	bool all_ok = true;
	std::string witness;
	for (int i = 0; i < dim_ && all_ok; ++i)
		for (int j = i + 1; j < dim_ && all_ok; ++j)
			for (int k = j + 1; k < dim_; ++k) {
				// [[i,j],k] + [[j,k],i] + [[k,i],j]
				std::vector<Coeff> acc(dim_);
				auto addcyc = [&](int a, int b, int c) {
					auto ab = bracket_basis(a, b);
					for (int m = 0; m < dim_; ++m) {
						if (ab[m].is_zero())
							continue;
						auto mc = bracket_basis(m, c);
						for (int t = 0; t < dim_; ++t)
							acc[t] += ab[m] * mc[t];
					}
				};
				addcyc(i, j, k);
				addcyc(j, k, i);
				addcyc(k, i, j);
				bool ok = true;
				for (const auto &x : acc)
					if (!x.is_zero())
						ok = false;
				if (!ok) {
					all_ok = false;
					std::ostringstream os;
					os << "triple (" << i + 1 << "," << j + 1 << "," << k + 1
					   << "), residual " << coeff_vec_str(acc);
					witness = os.str();
					break;
				}
			}
	rep.add("jacobi", all_ok, witness);
	return rep;
}

bool LieAlgebra::operator==(const LieAlgebra &o) const
{
	if (dim_ != o.dim_)
		return false;
	for (int i = 0; i < dim_; ++i)
		for (int j = i + 1; j < dim_; ++j)
			if (bracket_basis(i, j) != o.bracket_basis(i, j))
				return false;
	return true;
}

template std::vector<Coeff> LieAlgebra::bracket(const std::vector<Coeff> &,
                                                const std::vector<Coeff> &) const;
template std::vector<CoeffFrac> LieAlgebra::bracket(const std::vector<CoeffFrac> &,
                                                    const std::vector<CoeffFrac> &) const;

FMatrix LieAction::matrix_of(const std::vector<std::vector<Coeff>> &rows)
{
	FMatrix m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
	for (int i = 0; i < m.rows; ++i)
		for (int j = 0; j < m.cols; ++j)
			m.at(i, j) = CoeffFrac(rows[i][j]);
	return m;
}

static FMatrix mat_mul(const FMatrix &a, const FMatrix &b)
{
	require(a.cols == b.rows, "matrix product shape mismatch");
	FMatrix r(a.rows, b.cols);
	for (int i = 0; i < a.rows; ++i)
		for (int k = 0; k < a.cols; ++k) {
			if (a.at(i, k).is_zero())
				continue;
			for (int j = 0; j < b.cols; ++j)
				r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
		}
	return r;
}

static FMatrix mat_sub(const FMatrix &a, const FMatrix &b)
{
	FMatrix r(a.rows, a.cols);
	for (size_t i = 0; i < a.a.size(); ++i)
		r.a[i] = a.a[i] - b.a[i];
	return r;
}

static bool mat_is_zero(const FMatrix &m)
{
	for (const auto &x : m.a)
		if (!x.is_zero())
			return false;
	return true;
}

static std::vector<CoeffFrac> mat_apply(const FMatrix &m, const std::vector<CoeffFrac> &v)
{
	std::vector<CoeffFrac> out(m.rows);
	for (int i = 0; i < m.rows; ++i)
		for (int j = 0; j < m.cols; ++j)
			if (!m.at(i, j).is_zero() && !v[j].is_zero())
				out[i] = out[i] + m.at(i, j) * v[j];
	return out;
}

Report LieAction::check_homomorphism() const
{
	Report rep;
	int d = source->dim();
	bool ok = true;
	std::string witness;
	for (int i = 0; i < d && ok; ++i)
		for (int j = i + 1; j < d; ++j) {
			auto cb = source->bracket_basis(i, j);
			FMatrix lhs(target_dim, target_dim);
			for (int k = 0; k < d; ++k)
				if (!cb[k].is_zero()) {
					CoeffFrac f{cb[k]};
					for (size_t t = 0; t < lhs.a.size(); ++t)
						lhs.a[t] = lhs.a[t] + f * mats[k].a[t];
				}
			FMatrix rhs = mat_sub(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i]));
			if (!mat_is_zero(mat_sub(lhs, rhs))) {
				ok = false;
				witness = "basis pair (" + std::to_string(i + 1) + "," +
				          std::to_string(j + 1) + ")";
				break;
			}
		}
	rep.add("action.homomorphism", ok, witness);
	return rep;
}

Report LieAction::check_derivation() const
{
	Report rep;
	require(target != nullptr, "check_derivation: target is not a Lie algebra");
	int d = source->dim(), t = target->dim();
	bool ok = true;
	std::string witness;
	for (int x = 0; x < d && ok; ++x)
		for (int i = 0; i < t && ok; ++i)
			for (int j = i + 1; j < t; ++j) {
				// action(x)[e_i,e_j] = [action(x)e_i, e_j] + [e_i, action(x)e_j]
				std::vector<CoeffFrac> lhs(t), rhs(t);
				auto cb = target->bracket_basis(i, j);
				std::vector<CoeffFrac> cbv(cb.begin(), cb.end());
				lhs = mat_apply(mats[x], cbv);
				for (int m = 0; m < t; ++m) {
					const CoeffFrac &xi = mats[x].at(m, i);
					if (!xi.is_zero()) {
						auto mj = target->bracket_basis(m, j);
						for (int k = 0; k < t; ++k)
							rhs[k] = rhs[k] + xi * CoeffFrac(mj[k]);
					}
					const CoeffFrac &xj = mats[x].at(m, j);
					if (!xj.is_zero()) {
						auto im = target->bracket_basis(i, m);
						for (int k = 0; k < t; ++k)
							rhs[k] = rhs[k] + xj * CoeffFrac(im[k]);
					}
				}
				for (int k = 0; k < t; ++k)
					if (!(lhs[k] == rhs[k])) {
						ok = false;
						witness = "x=e" + std::to_string(x + 1) + ", pair (" +
						          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
						break;
					}
			}
	rep.add("action.derivation", ok, witness);
	return rep;
}

FMatrix LieCocycle::pi_inverse() const
{
	auto inv = inverse(pi);
	require(inv.has_value(), "LieCocycle: pi is not invertible");
	return *inv;
}

Report LieCocycle::check_cocycle() const
{
	Report rep;
	require(pi.rows == a->dim() && pi.cols == g->dim(), "LieCocycle: pi shape mismatch");
	if (pi.rows != pi.cols || !inverse(pi).has_value()) {
		rep.add("cocycle.bijective", false, "pi is not a bijection");
		return rep;
	}
	rep.add("cocycle.bijective", true);

	auto column = [&](const FMatrix &m, int j) {
		std::vector<CoeffFrac> v(m.rows);
		for (int i = 0; i < m.rows; ++i)
			v[i] = m.at(i, j);
		return v;
	};
	int d = g->dim();
	auto residual = [&](int sign) {
		// pi([gi,gj]) - [pi gi, pi gj]_a - sign*(rho(gi) pi gj - rho(gj) pi gi)
		for (int i = 0; i < d; ++i)
			for (int j = i + 1; j < d; ++j) {
				auto cb = g->bracket_basis(i, j);
				std::vector<CoeffFrac> lhs(a->dim());
				for (int k = 0; k < d; ++k)
					if (!cb[k].is_zero())
						for (int t = 0; t < a->dim(); ++t)
							lhs[t] = lhs[t] + CoeffFrac(cb[k]) * pi.at(t, k);
				std::vector<CoeffFrac> pi_i = column(pi, i), pi_j = column(pi, j);
				std::vector<CoeffFrac> rhs = a->bracket(pi_i, pi_j);
				auto r1 = mat_apply(rho->mats[i], pi_j);
				auto r2 = mat_apply(rho->mats[j], pi_i);
				CoeffFrac s{Coeff((long)sign)};
				for (int t = 0; t < a->dim(); ++t)
					rhs[t] = rhs[t] + s * (r1[t] - r2[t]);
				for (int t = 0; t < a->dim(); ++t)
					if (!(lhs[t] == rhs[t]))
						return std::make_pair(i, j);
			}
		return std::make_pair(-1, -1);
	};
	auto [i, j] = residual(+1);
	if (i < 0) {
		rep.add("cocycle.identity", true);
	} else {
		auto mirrored = residual(-1);
		std::string note = "basis pair (" + std::to_string(i + 1) + "," +
		                   std::to_string(j + 1) + ")";
		if (mirrored.first < 0)
			note += "; holds with the globally negated action "
			        "(sign-convention mismatch suspected)";
		rep.add("cocycle.identity", false, note);
	}
	return rep;
}

LieAlgebra semidirect(const LieAlgebra &a, const LieAlgebra &g, const LieAction &rho)
{
	require(rho.source == &g && rho.target == &a, "semidirect: action must be of g on a");
	require(rho.by_derivations, "semidirect: action must be flagged as by derivations");
	int da = a.dim(), dg = g.dim();
	std::vector<std::string> labels;
	for (const auto &l : a.labels())
		labels.push_back("a." + l);
	for (const auto &l : g.labels())
		labels.push_back("g." + l);
	LieAlgebra sd(da + dg, labels);
	for (int i = 0; i < da; ++i)
		for (int j = i + 1; j < da; ++j) {
			auto v = a.bracket_basis(i, j);
			v.resize(da + dg);
			sd.set_bracket(i, j, v);
		}
	for (int i = 0; i < dg; ++i)
		for (int j = i + 1; j < dg; ++j) {
			auto v = g.bracket_basis(i, j);
			std::vector<Coeff> w(da + dg);
			for (int k = 0; k < dg; ++k)
				w[da + k] = v[k];
			sd.set_bracket(da + i, da + j, w);
		}
	// [(b,0),(0,h)] = (-h*b, 0)
	for (int b = 0; b < da; ++b)
		for (int h = 0; h < dg; ++h) {
			std::vector<Coeff> w(da + dg);
			for (int k = 0; k < da; ++k)
				w[k] = -rho.mats[h].at(k, b).to_coeff();
			sd.set_bracket(b, da + h, w);
		}
	return sd;
}

GroupLog::GroupLog(const LieAlgebra &L, int N, int arity)
    : alg(&L), order(N), coeff_arity(arity),
      comp(N + 1, std::vector<MPoly>(L.dim(), MPoly(arity)))
{
}

bool GroupLog::is_zero() const
{
	for (const auto &row : comp)
		for (const auto &p : row)
			if (!p.is_zero())
				return false;
	return true;
}

void GroupLog::check_valuation() const
{
	for (const auto &p : comp[0])
		require(p.is_zero(), "GroupLog: nonzero h^0 component");
}

GroupLog GroupLog::operator-() const
{
	GroupLog r = *this;
	for (auto &row : r.comp)
		for (auto &p : row)
			p = -p;
	return r;
}

static void check_same_shape(const GroupLog &u, const GroupLog &v)
{
	require(u.alg == v.alg || (u.alg && v.alg && *u.alg == *v.alg),
	        "GroupLog: parent algebra mismatch");
	require(u.order == v.order, "GroupLog: truncation order mismatch");
	require(u.coeff_arity == v.coeff_arity, "GroupLog: coefficient ring mismatch");
}

GroupLog operator+(const GroupLog &u, const GroupLog &v)
{
	check_same_shape(u, v);
	GroupLog r = u;
	for (int m = 0; m <= r.order; ++m)
		for (size_t k = 0; k < r.comp[m].size(); ++k)
			r.comp[m][k] += v.comp[m][k];
	return r;
}

GroupLog operator-(const GroupLog &u, const GroupLog &v) { return u + (-v); }

GroupLog GroupLog::bracket(const GroupLog &v) const
{
	check_same_shape(*this, v);
	GroupLog r(*alg, order, coeff_arity);
	int d = alg->dim();
	for (int mi = 1; mi <= order; ++mi)
		for (int mj = 1; mi + mj <= order; ++mj) {
			for (int i = 0; i < d; ++i) {
				if (comp[mi][i].is_zero())
					continue;
				for (int j = 0; j < d; ++j) {
					if (v.comp[mj][j].is_zero())
						continue;
					auto cb = alg->bracket_basis(i, j);
					MPoly prod = comp[mi][i] * v.comp[mj][j];
					for (int k = 0; k < d; ++k)
						if (!cb[k].is_zero())
							r.comp[mi + mj][k] += prod.scale(cb[k]);
				}
			}
		}
	return r;
}

bool GroupLog::operator==(const GroupLog &o) const
{
	return order == o.order && coeff_arity == o.coeff_arity && comp == o.comp;
}

GroupLog GroupLog::specialize_eps(const Rat &value) const
{
	GroupLog r = *this;
	for (auto &row : r.comp)
		for (auto &p : row)
			p = p.specialize_eps(value);
	return r;
}

GroupLog GroupLog::apply_matrix(const FMatrix &m, const LieAlgebra &target) const
{
	require(m.cols == alg->dim() && m.rows == target.dim(),
	        "GroupLog: linear map shape mismatch");
	GroupLog r(target, order, coeff_arity);
	for (int o = 1; o <= order; ++o)
		for (int j = 0; j < m.cols; ++j) {
			if (comp[o][j].is_zero())
				continue;
			for (int i = 0; i < m.rows; ++i)
				if (!m.at(i, j).is_zero())
					r.comp[o][i] += comp[o][j].scale(m.at(i, j).to_coeff());
		}
	return r;
}

const std::vector<std::pair<std::string, Rat>> &bch_word_table(int N)
{
	static std::map<int, std::vector<std::pair<std::string, Rat>>> cache;
	auto it = cache.find(N);
	if (it != cache.end())
		return it->second;

	// noncommutative polynomial: word -> coefficient, truncated at length N
	using NC = std::map<std::string, Rat>;
	auto ncmul = [N](const NC &p, const NC &q) {
		NC r;
		for (const auto &[w1, c1] : p)
			for (const auto &[w2, c2] : q) {
				if (w1.size() + w2.size() > (size_t)N)
					continue;
				Rat &slot = r[w1 + w2];
				slot += c1 * c2;
			}
		for (auto i = r.begin(); i != r.end();)
			i = i->second == 0 ? r.erase(i) : std::next(i);
		return r;
	};
	std::vector<Rat> fact(N + 1, Rat(1));
	for (int i = 1; i <= N; ++i)
		fact[i] = fact[i - 1] * i;
	NC Z; // e^X e^Y - 1
	for (int i = 0; i <= N; ++i)
		for (int j = 0; i + j <= N; ++j) {
			if (i + j == 0)
				continue;
			Z[std::string(i, 'X') + std::string(j, 'Y')] = Rat(1) / (fact[i] * fact[j]);
		}
	NC W, Zk = {{"", Rat(1)}};
	for (int k = 1; k <= N; ++k) {
		Zk = ncmul(Zk, Z);
		Rat c = Rat((k % 2) ? 1 : -1, k);
		for (const auto &[w, v] : Zk)
			W[w] += c * v;
	}
	std::vector<std::pair<std::string, Rat>> out;
	for (const auto &[w, v] : W)
		if (v != 0 && !w.empty())
			out.emplace_back(w, v);
	return cache.emplace(N, std::move(out)).first->second;
}

GroupLog bch(const GroupLog &u, const GroupLog &v)
{
	check_same_shape(u, v);
	u.check_valuation();
	v.check_valuation();
	GroupLog result = u + v;
	for (const auto &[word, coef] : bch_word_table(u.order)) {
		int m = (int)word.size();
		if (m < 2)
			continue;
		GroupLog cur = word.back() == 'X' ? u : v;
		for (int i = m - 2; i >= 0; --i)
			cur = (word[i] == 'X' ? u : v).bracket(cur);
		if (cur.is_zero())
			continue;
		Rat c = coef / m;
		for (int o = 1; o <= result.order; ++o)
			for (size_t k = 0; k < cur.comp[o].size(); ++k)
				if (!cur.comp[o][k].is_zero())
					result.comp[o][k] += cur.comp[o][k].scale(Coeff(c));
	}
	return result;
}

GroupLog cocycle_exponentiate(const LieCocycle &pi, const LieAlgebra &sd,
                              const GroupLog &g_log)
{
	g_log.check_valuation();
	int da = pi.a->dim(), dg = pi.g->dim();
	require(sd.dim() == da + dg, "cocycle_exponentiate: semidirect dimension mismatch");
	GroupLog pu(sd, g_log.order, g_log.coeff_arity);  // (pi(u), u)
	GroupLog mu(sd, g_log.order, g_log.coeff_arity);  // (0, -u)
	for (int m = 1; m <= g_log.order; ++m)
		for (int j = 0; j < dg; ++j) {
			const MPoly &uj = g_log.comp[m][j];
			if (uj.is_zero())
				continue;
			for (int i = 0; i < da; ++i)
				if (!pi.pi.at(i, j).is_zero())
					pu.comp[m][i] += uj.scale(pi.pi.at(i, j).to_coeff());
			pu.comp[m][da + j] += uj;
			mu.comp[m][da + j] -= uj;
		}
	GroupLog res = bch(pu, mu);
	GroupLog out(*pi.a, g_log.order, g_log.coeff_arity);
	for (int m = 1; m <= g_log.order; ++m) {
		for (int k = 0; k < dg; ++k)
			require(res.comp[m][da + k].is_zero(),
			        "cocycle_exponentiate: factorization left a g-component");
		for (int i = 0; i < da; ++i)
			out.comp[m][i] = res.comp[m][i];
	}
	return out;
}

GroupLog cocycle_invert(const LieCocycle &pi, const LieAlgebra &sd, const GroupLog &a_log)
{
	a_log.check_valuation();
	FMatrix piinv = pi.pi_inverse();
	GroupLog u(*pi.g, a_log.order, a_log.coeff_arity);
	for (int target = 1; target <= a_log.order; ++target) {
		GroupLog e = cocycle_exponentiate(pi, sd, u);
		// correct order `target`: u_target += pi^{-1}(a_log - E(u))_target
		for (int j = 0; j < pi.g->dim(); ++j) {
			MPoly corr(a_log.coeff_arity);
			for (int i = 0; i < pi.a->dim(); ++i) {
				MPoly resid = a_log.comp[target][i] - e.comp[target][i];
				if (!resid.is_zero() && !piinv.at(j, i).is_zero())
					corr += resid.scale(piinv.at(j, i).to_coeff());
			}
			u.comp[target][j] += corr;
		}
	}
	return u;
}

} // namespace ybgeo
