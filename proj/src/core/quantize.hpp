#pragma once

#include "core/cbcst.hpp"

namespace ybgeo {

// Geometric quantum R-matrix: formal diffeomorphism of X^2 (point map),
// split into the images of the x-block (star part) and y-block (circ part).
struct RMatrixQ {
	int n = 0;
	int order = 0;
	std::vector<HSeries> star, circ; // n series each, arity 2n

	FormalDiffeo as_diffeo() const;
};

// The quantum side of the 7-tuple: the exponentiated cocycle is carried by
// (pi, semidirect) and Psi-tilde by the stored CBCST; quantize() is the
// production of R by Soloviev's formula.
struct QuantumTuple {
	CBCST c;
	int order = 0;
	// group-level cocycle bound to pi: logs in and out
	GroupLog pi_tilde(const GroupLog &g_log) const;
	GroupLog pi_tilde_inverse(const GroupLog &a_log) const;
	// group cocycle law pi~(gh) = pi~(g) (g |> pi~(h)) on supplied logs
	Report check_group_cocycle_law(const GroupLog &u, const GroupLog &v) const;
	// A x| G equivariance of Psi~ = e^{h Psi} for one semidirect basis element
	Report check_psi_tilde_equivariance() const;
};

QuantumTuple make_quantum(const CBCST &c, int N); // validates, N >= 2

// Soloviev's formula on the exponentiated tuple. Point-map convention: a
// group element with log w acts on X by the flow of -rho(w), the unique
// choice making exponentiated actions left actions on points.
RMatrixQ quantize(const CBCST &c, int N);
RMatrixQ quantize(const QuantumTuple &q);

// R12 R13 R23 = R23 R13 R12 on X^3 (operator products applied rightmost
// first). flip_variant instead checks the braid-group relation for sigma.R
// in adjacent placements; it is informational, not part of acceptance.
Report check_braid(const RMatrixQ &R, bool flip_variant = false);

// h^1 coefficient of the point map, negated per the pullback convention
// (R(f (x) g))(x,y) = (f (x) g)(R^{-1}(x,y)); equals as_field_on_square(r).
VectorField classical_limit_field(const RMatrixQ &R);
Report check_classical_limit(const RMatrixQ &R, const GeomRMatrix &r);

// R^{21} R = 1 mod h^{N+1}; on failure the report carries the lowest
// failing h-order.
bool check_quantum_unitarity(const RMatrixQ &R);
Report quantum_unitarity_report(const RMatrixQ &R);

// rack case: r with empty a-list quantizes to R(x,y) = (x, x |> y)
Report check_rack_case(const GeomRMatrix &r, int N);

// first-order invariants: star = x - h (y star x) + O(h^2) and
// circ = y - h (y circ x) + O(h^2), stated via the r-matrix field
Report check_first_order(const RMatrixQ &R, const CBCSTBuilder &b, const CBCST &c);

} // namespace ybgeo
