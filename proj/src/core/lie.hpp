#pragma once

#include "core/linalg.hpp"
#include "core/mpoly.hpp"
#include "core/report.hpp"
#include <functional>

namespace ybgeo {

// Finite-dimensional Lie algebra by structure constants over Coeff:
// [e_i, e_j] = sum_k c_{ij}^k e_k. Only i<j is stored; antisymmetry is built in.
class LieAlgebra {
  public:
	LieAlgebra() = default;
	LieAlgebra(int dim, std::vector<std::string> labels);
	static LieAlgebra abelian(int dim);

	int dim() const { return dim_; }
	const std::vector<std::string> &labels() const { return labels_; }

	void set_bracket(int i, int j, std::vector<Coeff> coeffs); // i < j
	std::vector<Coeff> bracket_basis(int i, int j) const;

	// bracket of coefficient vectors over an arbitrary commutative scalar type
	template <class V> V bracket(const V &u, const V &v) const;

	LieAlgebra specialize_eps(const Rat &value) const;
	bool is_abelian() const;

	// every (i,j,k) basis-triple Jacobi violation, with residual vectors
	Report check_jacobi() const;

	bool operator==(const LieAlgebra &o) const;

  private:
	int dim_ = 0;
	std::vector<std::string> labels_;
	// c_[pair_index(i,j)][k], i<j
	std::vector<std::vector<Coeff>> c_;
	int pair_index(int i, int j) const { return i * dim_ + j; }
};

// Linear action of a Lie algebra: one dim_target x dim_target... matrix per
// source basis element; target is either a plain vector space or a Lie
// algebra (then it can be flagged as acting by derivations).
struct LieAction {
	const LieAlgebra *source = nullptr;
	const LieAlgebra *target = nullptr; // null for a bare vector space
	int target_dim = 0;
	bool by_derivations = false;
	std::vector<FMatrix> mats; // over CoeffFrac for uniformity; entries stay in Q[eps]

	static FMatrix matrix_of(const std::vector<std::vector<Coeff>> &rows);

	// action([x,y]) = action(x)action(y) - action(y)action(x) on basis pairs
	Report check_homomorphism() const;
	// Leibniz rule on target brackets, all basis triples (needs target algebra)
	Report check_derivation() const;
};

// Bijective 1-cocycle pi: g -> a as a dim(a) x dim(g) matrix over Coeff,
// relative to the action rho of g on a.
struct LieCocycle {
	const LieAlgebra *g = nullptr;
	const LieAlgebra *a = nullptr;
	const LieAction *rho = nullptr;
	FMatrix pi; // columns indexed by g basis

	FMatrix pi_inverse() const; // fails when singular
	// pi([g,h]) = [pi g, pi h]_a + rho(g) pi h - rho(h) pi g, all basis pairs.
	// A failure that disappears under a globally negated action is flagged as
	// a sign-convention diagnostic rather than auto-fixed.
	Report check_cocycle() const;
};

// Semidirect product a x| g for a derivation action of g on a; basis is the
// a-basis followed by the g-basis, bracket
// [(a,g),(b,h)] = (g*b - h*a + [a,b], [g,h]).
LieAlgebra semidirect(const LieAlgebra &a, const LieAlgebra &g, const LieAction &rho);

// hbar-graded logarithm of a formal group element: sum_{m>=1} v_m h^m with
// v_m a coefficient vector over MPoly (arity = parameter ring, may be 0).
struct GroupLog {
	const LieAlgebra *alg = nullptr;
	int order = 0;
	int coeff_arity = 0;
	// comp[m][k], m = 0..order (comp[0] must stay zero), k < alg->dim()
	std::vector<std::vector<MPoly>> comp;

	GroupLog() = default;
	GroupLog(const LieAlgebra &L, int N, int arity);

	bool is_zero() const;
	void check_valuation() const;
	GroupLog operator-() const;
	friend GroupLog operator+(const GroupLog &u, const GroupLog &v);
	friend GroupLog operator-(const GroupLog &u, const GroupLog &v);
	GroupLog bracket(const GroupLog &v) const;
	bool operator==(const GroupLog &o) const;
	GroupLog specialize_eps(const Rat &value) const;
	// apply a linear map (rows = target components over Coeff) componentwise
	GroupLog apply_matrix(const FMatrix &m, const LieAlgebra &target) const;
};

// Dynkin-word table: log(e^X e^Y) as words over {X,Y} with rational
// coefficients up to total degree N (computed once per N and cached).
const std::vector<std::pair<std::string, Rat>> &bch_word_table(int N);

// log(e^u e^v) mod h^{N+1} via the cached word table and right-normed
// bracketing (Dynkin-Specht-Wever); valuation >= 1 keeps it finite.
GroupLog bch(const GroupLog &u, const GroupLog &v);

// Generic BCH over any bracket: used for vector fields in tests and flows.
template <class T>
T bch_generic(const T &u, const T &v, int N, const std::function<T(const T &, const T &)> &br,
              const std::function<T(const T &, const Rat &)> &scale,
              const std::function<T(const T &, const T &)> &add)
{
	T result = add(u, v); // degree-1 words X, Y both have coefficient 1
	for (const auto &[word, coef] : bch_word_table(N)) {
		int m = (int)word.size();
		if (m < 2)
			continue;
		T cur = word.back() == 'X' ? u : v;
		for (int i = m - 2; i >= 0; --i)
			cur = br(word[i] == 'X' ? u : v, cur);
		result = add(result, scale(cur, coef / m));
	}
	return result;
}

// The a-component of the factorization e^{(pi(u),u)} = (a-part, g-part) in
// e^{a x| g}; the group-level cocycle applied to logs.
GroupLog cocycle_exponentiate(const LieCocycle &pi, const LieAlgebra &sd,
                              const GroupLog &g_log);
// Unique g-log with cocycle_exponentiate(pi, ., .) equal to a_log, found by
// graded fixed-point iteration.
GroupLog cocycle_invert(const LieCocycle &pi, const LieAlgebra &sd, const GroupLog &a_log);

} // namespace ybgeo
