#include "core/linalg.hpp"

namespace ybgeo {

FMatrix FMatrix::identity(int n)
{
	FMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m.at(i, i) = CoeffFrac(Coeff(1));
	return m;
}

std::vector<int> rref(FMatrix &m)
{
	std::vector<int> pivots;
	int r = 0;
	for (int c = 0; c < m.cols && r < m.rows; ++c) {
		int sel = -1;
		for (int i = r; i < m.rows; ++i)
			if (!m.at(i, c).is_zero()) {
				sel = i;
				break;
			}
		if (sel < 0)
			continue;
		if (sel != r)
			for (int j = 0; j < m.cols; ++j)
				std::swap(m.at(sel, j), m.at(r, j));
		CoeffFrac inv = CoeffFrac(Coeff(1)) / m.at(r, c);
		for (int j = c; j < m.cols; ++j)
			m.at(r, j) = m.at(r, j) * inv;
		for (int i = 0; i < m.rows; ++i) {
			if (i == r || m.at(i, c).is_zero())
				continue;
			CoeffFrac f = m.at(i, c);
			for (int j = c; j < m.cols; ++j)
				m.at(i, j) = m.at(i, j) - f * m.at(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

int rank(FMatrix m) { return (int)rref(m).size(); }

std::optional<std::vector<CoeffFrac>> solve_row_combination(
    const std::vector<std::vector<CoeffFrac>> &rows, const std::vector<CoeffFrac> &target)
{
	// transpose: columns = rows, augmented with target
	int nrows = rows.empty() ? 0 : (int)rows[0].size();
	int ncols = (int)rows.size();
	FMatrix m(nrows, ncols + 1);
	for (int i = 0; i < nrows; ++i) {
		for (int j = 0; j < ncols; ++j)
			m.at(i, j) = rows[j][i];
		m.at(i, ncols) = target[i];
	}
	std::vector<int> piv = rref(m);
	std::vector<CoeffFrac> x(ncols);
	for (size_t k = 0; k < piv.size(); ++k) {
		if (piv[k] == ncols)
			return std::nullopt; // inconsistent
		x[piv[k]] = m.at((int)k, ncols);
	}
	return x;
}

std::optional<FMatrix> inverse(const FMatrix &m)
{
	require(m.rows == m.cols, "inverse: non-square matrix");
	int n = m.rows;
	FMatrix aug(n, 2 * n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j)
			aug.at(i, j) = m.at(i, j);
		aug.at(i, n + i) = CoeffFrac(Coeff(1));
	}
	std::vector<int> piv = rref(aug);
	if ((int)piv.size() != n || piv.back() != n - 1)
		return std::nullopt;
	FMatrix inv(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			inv.at(i, j) = aug.at(i, n + j);
	return inv;
}

std::optional<std::vector<CoeffFrac>> kernel_vector(const FMatrix &m)
{
	FMatrix r = m;
	std::vector<int> piv = rref(r);
	if ((int)piv.size() == m.cols)
		return std::nullopt;
	// find first non-pivot column, back-substitute
	std::vector<bool> is_piv(m.cols, false);
	for (int c : piv)
		is_piv[c] = true;
	int free_col = 0;
	while (free_col < m.cols && is_piv[free_col])
		++free_col;
	std::vector<CoeffFrac> v(m.cols);
	v[free_col] = CoeffFrac(Coeff(1));
	for (size_t k = 0; k < piv.size(); ++k)
		v[piv[k]] = -r.at((int)k, free_col);
	return v;
}

} // namespace ybgeo
