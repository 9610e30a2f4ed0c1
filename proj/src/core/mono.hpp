#pragma once

#include "core/error.hpp"
#include <cstdint>

namespace ybgeo {

// Packed exponent vector. Layout (128 bits): total degree in the top 16 bits,
// then one 7-bit field per variable, variable 0 most significant. Integer
// comparison of the packed key is exactly graded lex with x1 > x2 > ...
//
// Bounds: arity <= 16, per-variable exponent <= 127. Far beyond anything the
// pipelines produce; violations throw. The total degree field cannot overflow
// while the per-variable fields are in range (16 * 127 < 2^16).
struct Mono {
	using Key = unsigned __int128;
	static constexpr int kMaxVars = 16;
	static constexpr int kBits = 7;
	static constexpr unsigned kMaxExp = (1u << kBits) - 1;

	Key key = 0;

	Mono() = default;

	static constexpr int shift(int var) { return (kMaxVars - 1 - var) * kBits; }

	// a carry out of any 7-bit field sets the bit just above that field
	static constexpr Key carry_mask()
	{
		Key out = 0;
		for (int i = 1; i <= kMaxVars; ++i)
			out |= (Key)1 << (i * kBits);
		return out;
	}

	static Mono var(int i, unsigned e = 1)
	{
		require(i >= 0 && i < kMaxVars, "Mono: variable index out of range");
		require(e <= kMaxExp, "Mono: exponent too large");
		Mono m;
		m.key = ((Key)e << shift(i)) | ((Key)e << (kMaxVars * kBits));
		return m;
	}

	unsigned exp(int i) const { return (unsigned)((key >> shift(i)) & kMaxExp); }
	unsigned degree() const { return (unsigned)(key >> (kMaxVars * kBits)); }
	bool is_constant() const { return key == 0; }

	Mono operator*(const Mono &o) const
	{
		Mono r;
		r.key = key + o.key;
		require(((key ^ o.key ^ r.key) & carry_mask()) == 0, "Mono: exponent overflow");
		return r;
	}

	// divide by var i (exponent must be positive); used by d/dx
	Mono div_var(int i) const
	{
		require(exp(i) > 0, "Mono: division by absent variable");
		Mono r;
		r.key = key - ((Key)1 << shift(i)) - ((Key)1 << (kMaxVars * kBits));
		return r;
	}

	bool operator==(const Mono &o) const { return key == o.key; }
	bool operator<(const Mono &o) const { return key < o.key; }
};

} // namespace ybgeo
