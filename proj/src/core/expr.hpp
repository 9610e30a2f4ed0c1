#pragma once

#include "core/series.hpp"
#include <memory>

namespace ybgeo {

// Expression tree over the shared text grammar:
//   variables x1..xn, y1..yn, z1..zn, the symbols `h` and `eps`,
//   rational literals p/q, operators + - * / ( ) ^, functions ln(..), exp(..).
// Whitespace-insensitive. '^' takes a nonnegative integer literal exponent.
struct Expr {
	enum Kind { Add, Sub, Mul, Div, Neg, Ln, Exp, Pow, Lit, Var, Hbar, Eps };
	Kind kind;
	Rat lit;                 // Lit
	int block = 0, idx = 0;  // Var: block 0/1/2 for x/y/z, idx 0-based
	unsigned pow_exp = 0;    // Pow
	std::shared_ptr<Expr> a, b;
};

using ExprPtr = std::shared_ptr<Expr>;

ExprPtr parse_expr(const std::string &text);

// Expand to a truncated series. block_width is the ambient dimension n that
// the x/y/z blocks refer to; arity is the total ring arity (n, 2n or 3n).
// Division requires the divisor's h^0 term to be a nonzero rational constant,
// ln requires its argument's h^0 term to equal 1, exp requires positive
// valuation; violations throw.
HSeries expand_expr(const Expr &e, int order, int arity, int block_width);
HSeries expand_expr(const std::string &text, int order, int arity, int block_width);

// Restricted evaluations through the same grammar.
MPoly parse_mpoly(const std::string &text, int arity, int block_width = 0);
Coeff parse_coeff(const std::string &text);
Rat parse_rat(const std::string &text);

} // namespace ybgeo
