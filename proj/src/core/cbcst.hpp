#pragma once

#include "core/lie.hpp"
#include "core/rmatrix.hpp"

namespace ybgeo {

// Classical bijective cocycle 7-tuple (g, a, X, rho_ga, rho_gaX, pi, Psi)
// over X = affine n-space. Stored as plain data; action/cocycle views are
// built on demand so the struct stays freely copyable.
struct CBCST {
	int n = 0;
	LieAlgebra a, g;
	std::vector<FMatrix> rho_ga; // per g basis element, d_a x d_a over Q[eps]
	FMatrix pi;                  // d_a x d_g, pi(g_j) = sum_i pi[i][j] delta_i
	// rho_gaX on the a-basis and g-basis separately
	std::vector<VectorField> rho_aX, rho_gX;
	std::vector<MPoly> psi; // d_a components, arity n

	LieAction rho_ga_action() const; // view bound to this object
	LieAlgebra make_semidirect() const;
	CBCST specialize_eps(const Rat &value) const;

	// rho of the second g -> Vect(X) composition, g |-> rho(pi(g), g)
	VectorField rho_second(int g_index) const;
};

// Intermediate data of the forward construction; keeps the expansion tables
// needed by the star/circ maps and the proof-level identity checks.
struct CBCSTBuilder {
	GeomRMatrix r;              // minimized input
	std::vector<MPoly> fbasis;  // echelon basis f_1..f_d of V1+V2
	std::vector<std::vector<Coeff>> acoef, bcoef; // a0_i / b0_j in fbasis
	// expansions of a1_i . f_k and b1_j . f_k in fbasis
	std::vector<std::vector<std::vector<Coeff>>> a_act, b_act;

	int dim() const { return (int)fbasis.size(); }
	// the maps of the proof; star/circ of eq:star / eq:circ on dual-basis pairs
	std::vector<Coeff> star(int c, int e) const;
	std::vector<Coeff> circ(int c, int e) const;
	// p(x) for a functional given by dual coordinates
	std::pair<VectorField, VectorField> p_pair(const std::vector<Coeff> &x) const;

	// g1/g2 subalgebra closures, span invariances, Im(p) bracket closure,
	// and the identities eq:sryb, eq:fryb, eq:et on all basis tuples
	Report check_proof_identities(const CBCST &c) const;
};

struct FromRMatrix {
	CBCST cbcst;
	CBCSTBuilder builder;
};

// Theorem's forward direction. Requires CYBE to hold; fails with a witness
// when p is not injective on a (pi would not be bijective).
FromRMatrix from_rmatrix(const GeomRMatrix &r);

// Backward direction: r = r1 + r2 read off alpha and beta; output is minimal.
GeomRMatrix to_rmatrix(const CBCST &c);

// Every axiom and lemma as an itemized report.
Report validate(const CBCST &c);

// Explicit isomorphism witness between two CBCSTs over the same X, derived
// from the Psi components (phi_a) and the cocycles (phi_g = pi2^{-1} phi_a pi1).
struct IsoWitness {
	bool valid = false;
	std::string detail;
	FMatrix phi_a, phi_g; // c1 -> c2 basis changes
};
IsoWitness cbcst_isomorphism(const CBCST &c1, const CBCST &c2);

} // namespace ybgeo
