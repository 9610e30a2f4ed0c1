#pragma once

#include "core/report.hpp"
#include "core/vfield.hpp"

namespace ybgeo {

// Geometric classical r-matrix: finite element of
// Vect(X) (x) O(X)  (+)  O(X) (x) Vect(X), stored as the two term lists
// r = sum_i a1_i (x) a0_i + sum_j b0_j (x) b1_j.
struct GeomRMatrix {
	int n = 0; // dimension of X
	std::vector<std::pair<VectorField, MPoly>> a_terms; // (a1_i, a0_i)
	std::vector<std::pair<MPoly, VectorField>> b_terms; // (b0_j, b1_j)

	GeomRMatrix() = default;
	explicit GeomRMatrix(int dim) : n(dim) {}

	GeomRMatrix specialize_eps(const Rat &value) const;
	// swap of tensor legs: a-terms become b-terms and vice versa
	GeomRMatrix flip() const;
	GeomRMatrix negate() const;
	// equality as an element of the sum space
	bool equals(const GeomRMatrix &o) const;
};

// Canonical minimal presentation: both lists rank-reduced, function bases in
// reduced row echelon form under graded lex, fields read off the pivots.
// Idempotent and preserves the underlying tensor.
GeomRMatrix minimize(const GeomRMatrix &r);
bool is_minimal(const GeomRMatrix &r);

// r as the vector field on X^2 with x-block sum_i a1_i(x) a0_i(y) and
// y-block sum_j b0_j(x) b1_j(y).
VectorField as_field_on_square(const GeomRMatrix &r);
// same, placed on factors (i,j) of X^k
VectorField r_field_placed(const GeomRMatrix &r, int i, int j, int k);

// [r12,r13]+[r12,r23]+[r13,r23] on X^3; passes iff the residual is zero.
Report check_cybe(const GeomRMatrix &r);
// the three homogeneous components, checked independently (requires a
// minimal presentation)
Report check_cybe_split(const GeomRMatrix &r);
// r^{21} = -r as elements of the sum space
bool check_unitarity(const GeomRMatrix &r);

} // namespace ybgeo
