#pragma once

#include "core/coeff.hpp"
#include <optional>
#include <vector>

namespace ybgeo {

// Dense matrix over the fraction field Q(eps); exact pivoting, used for the
// span/echelon computations in the correspondence. Generic rank over Q(eps)
// is what "eps-generic" means throughout.
struct FMatrix {
	int rows = 0, cols = 0;
	std::vector<CoeffFrac> a;

	FMatrix() = default;
	FMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
	CoeffFrac &at(int i, int j) { return a[(size_t)i * cols + j]; }
	const CoeffFrac &at(int i, int j) const { return a[(size_t)i * cols + j]; }

	static FMatrix identity(int n);
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(FMatrix &m);
int rank(FMatrix m);

// Solve x * M = target for a row vector x (M given by rows); nullopt if the
// target is not in the row span.
std::optional<std::vector<CoeffFrac>> solve_row_combination(
    const std::vector<std::vector<CoeffFrac>> &rows, const std::vector<CoeffFrac> &target);

// Inverse of a square matrix; nullopt if singular.
std::optional<FMatrix> inverse(const FMatrix &m);

// A nonzero kernel vector of the column map x -> M x, if any.
std::optional<std::vector<CoeffFrac>> kernel_vector(const FMatrix &m);

} // namespace ybgeo
