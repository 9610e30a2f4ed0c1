#pragma once

#include "core/series.hpp"

namespace ybgeo {

// Polynomial vector field sum_i v_i d/du_i on affine space of dimension m.
struct VectorField {
	int arity = 0;
	std::vector<MPoly> comps;

	VectorField() = default;
	explicit VectorField(int m) : arity(m), comps(m, MPoly(m)) {}

	bool is_zero() const;
	bool operator==(const VectorField &o) const
	{
		return arity == o.arity && comps == o.comps;
	}

	VectorField operator-() const;
	friend VectorField operator+(const VectorField &a, const VectorField &b);
	friend VectorField operator-(const VectorField &a, const VectorField &b);
	VectorField scale(const Coeff &c) const;
	VectorField specialize_eps(const Rat &value) const;
	// move to a bigger ambient space; both the components' variables and the
	// differentiation slots follow the map
	VectorField remap(int new_arity, const std::vector<int> &map) const;

	std::string to_string(int block_width = 0) const;
};

// v acting on a function as a derivation
MPoly vf_apply(const VectorField &v, const MPoly &f);
// commutator of derivations; components v.w_i - w.v_i
VectorField vf_bracket(const VectorField &v, const VectorField &w);

// hbar-graded vector field with series components of positive valuation
struct HVectorField {
	int arity = 0;
	int order = 0;
	std::vector<HSeries> comps;

	HVectorField() = default;
	HVectorField(int m, int N) : arity(m), order(N), comps(m, HSeries(m, N)) {}

	void check_valuation() const;
	HVectorField operator-() const;
	friend HVectorField operator+(const HVectorField &a, const HVectorField &b);
	bool is_zero() const;
};

HSeries hvf_apply(const HVectorField &v, const HSeries &s);
HVectorField hvf_bracket(const HVectorField &v, const HVectorField &w);

// Formal diffeomorphism of affine m-space: coordinate images F_i == u_i mod h.
struct FormalDiffeo {
	int arity = 0;
	int order = 0;
	std::vector<HSeries> images;

	FormalDiffeo() = default;
	static FormalDiffeo identity(int m, int N);

	void check_shape() const; // images == id mod h
	bool is_identity() const;
	bool operator==(const FormalDiffeo &o) const
	{
		return arity == o.arity && order == o.order && images == o.images;
	}
};

// coordinate images of exp(v): u_i -> sum_k v^k(u_i)/k!  (finite under truncation)
FormalDiffeo flow(const HVectorField &v);
// point maps composed as (F then G): images G_i with variables replaced by F's components
FormalDiffeo compose(const FormalDiffeo &F, const FormalDiffeo &G);
// two-sided inverse mod h^{N+1}, solved order by order
FormalDiffeo invert(const FormalDiffeo &F);
// F on X^2 placed on factors (i,j) of X^k (1-based, i<j), identity elsewhere
FormalDiffeo place(const FormalDiffeo &F, int n, int i, int j, int k);

} // namespace ybgeo
