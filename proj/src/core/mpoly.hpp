#pragma once

#include "core/coeff.hpp"
#include "core/mono.hpp"
#include <vector>

namespace ybgeo {

// Sparse multivariate polynomial over Coeff. Terms are kept sorted in
// descending graded-lex order with no zero coefficients; this canonical form
// makes == structural equality.
class MPoly {
  public:
	struct Term {
		Mono m;
		Coeff c;
	};

	explicit MPoly(int arity = 0) : arity_(arity)
	{
		require(arity >= 0 && arity <= Mono::kMaxVars, "MPoly: unsupported arity");
	}
	static MPoly constant(int arity, Coeff c);
	static MPoly var(int arity, int i, unsigned e = 1);

	int arity() const { return arity_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Coeff constant_term() const;
	// coefficient of a given monomial
	Coeff coeff(const Mono &m) const;
	// coefficient of the degree-1 monomial in variable i
	Coeff linear_coeff(int i) const { return coeff(Mono::var(i)); }
	unsigned degree() const { return terms_.empty() ? 0 : terms_.front().m.degree(); }
	const std::vector<Term> &terms() const { return terms_; }

	MPoly operator-() const;
	friend MPoly operator+(const MPoly &a, const MPoly &b);
	friend MPoly operator-(const MPoly &a, const MPoly &b);
	friend MPoly operator*(const MPoly &a, const MPoly &b);
	MPoly &operator+=(const MPoly &o) { return *this = *this + o; }
	MPoly &operator-=(const MPoly &o) { return *this = *this - o; }
	MPoly &operator*=(const MPoly &o) { return *this = *this * o; }
	MPoly scale(const Coeff &c) const;

	bool operator==(const MPoly &o) const
	{
		return arity_ == o.arity_ && terms_ == o.terms_;
	}
	bool operator!=(const MPoly &o) const { return !(*this == o); }

	MPoly diff(int var) const;
	MPoly specialize_eps(const Rat &value) const;

	// reinterpret in a larger ring, variable i -> map[i]
	MPoly remap(int new_arity, const std::vector<int> &map) const;
	// reinterpret in a larger ring at a block offset (variable i -> offset+i)
	MPoly embed(int new_arity, int offset) const;

	// replace every coefficient through f (used for eps specialization etc.)
	std::string to_string(int block_width = 0) const;

	// deterministic total order (by leading terms), for canonical sorting
	int cmp(const MPoly &o) const;

	void add_term(const Mono &m, const Coeff &c); // builder helper; re-canonicalizes

  private:
	void canonicalize();
	int arity_;
	std::vector<Term> terms_;

	friend bool operator==(const Term &a, const Term &b);
};

inline bool operator==(const MPoly::Term &a, const MPoly::Term &b)
{
	return a.m == b.m && a.c == b.c;
}

std::string mono_to_string(const Mono &m, int arity, int block_width);
// variable display name under the x/y/z block convention
std::string var_name(int index, int block_width);

} // namespace ybgeo
