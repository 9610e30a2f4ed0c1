#include "core/expr.hpp"

#include <cctype>

namespace ybgeo {

namespace {

struct Parser {
	const std::string &s;
	size_t pos = 0;

	explicit Parser(const std::string &text) : s(text) {}

	void skip_ws()
	{
		while (pos < s.size() && std::isspace((unsigned char)s[pos]))
			++pos;
	}

	char peek()
	{
		skip_ws();
		return pos < s.size() ? s[pos] : '\0';
	}

	bool eat(char c)
	{
		if (peek() == c) {
			++pos;
			return true;
		}
		return false;
	}

	[[noreturn]] void error(const std::string &msg)
	{
		fail("parse error at position " + std::to_string(pos) + ": " + msg);
	}

	ExprPtr make(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr)
	{
		auto e = std::make_shared<Expr>();
		e->kind = k;
		e->a = std::move(a);
		e->b = std::move(b);
		return e;
	}

	ExprPtr parse_sum()
	{
		ExprPtr left = parse_product();
		for (;;) {
			if (eat('+'))
				left = make(Expr::Add, left, parse_product());
			else if (eat('-'))
				left = make(Expr::Sub, left, parse_product());
			else
				return left;
		}
	}

	ExprPtr parse_product()
	{
		ExprPtr left = parse_unary();
		for (;;) {
			if (eat('*'))
				left = make(Expr::Mul, left, parse_unary());
			else if (eat('/'))
				left = make(Expr::Div, left, parse_unary());
			else
				return left;
		}
	}

	ExprPtr parse_unary()
	{
		if (eat('-'))
			return make(Expr::Neg, parse_unary());
		if (eat('+'))
			return parse_unary();
		return parse_power();
	}

	ExprPtr parse_power()
	{
		ExprPtr base = parse_atom();
		if (eat('^')) {
			skip_ws();
			size_t start = pos;
			while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
				++pos;
			if (start == pos)
				error("expected integer exponent after '^'");
			auto e = make(Expr::Pow, base);
			e->pow_exp = (unsigned)std::stoul(s.substr(start, pos - start));
			return e;
		}
		return base;
	}

	ExprPtr parse_atom()
	{
		char c = peek();
		if (c == '(') {
			++pos;
			ExprPtr e = parse_sum();
			if (!eat(')'))
				error("expected ')'");
			return e;
		}
		if (std::isdigit((unsigned char)c)) {
			size_t start = pos;
			while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
				++pos;
			auto e = make(Expr::Lit);
			e->lit = Rat(s.substr(start, pos - start));
			return e;
		}
		if (std::isalpha((unsigned char)c)) {
			size_t start = pos;
			while (pos < s.size() && std::isalpha((unsigned char)s[pos]))
				++pos;
			std::string name = s.substr(start, pos - start);
			size_t dstart = pos;
			while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
				++pos;
			std::string digits = s.substr(dstart, pos - dstart);
			if (name == "ln" || name == "exp") {
				if (!digits.empty())
					error("unexpected digits after function name");
				if (!eat('('))
					error("expected '(' after " + name);
				ExprPtr arg = parse_sum();
				if (!eat(')'))
					error("expected ')'");
				return make(name == "ln" ? Expr::Ln : Expr::Exp, arg);
			}
			if (name == "h" && digits.empty())
				return make(Expr::Hbar);
			if (name == "eps" && digits.empty())
				return make(Expr::Eps);
			if ((name == "x" || name == "y" || name == "z") && !digits.empty()) {
				auto e = make(Expr::Var);
				e->block = name == "x" ? 0 : name == "y" ? 1 : 2;
				e->idx = std::stoi(digits) - 1;
				if (e->idx < 0)
					error("variable indices start at 1");
				return e;
			}
			error("unknown symbol '" + name + digits + "'");
		}
		error("unexpected character");
	}
};

} // namespace

ExprPtr parse_expr(const std::string &text)
{
	Parser p(text);
	ExprPtr e = p.parse_sum();
	p.skip_ws();
	if (p.pos != text.size())
		p.error("trailing input");
	return e;
}

static HSeries expand(const Expr &e, int order, int arity, int n)
{
	switch (e.kind) {
	case Expr::Add:
		return expand(*e.a, order, arity, n) + expand(*e.b, order, arity, n);
	case Expr::Sub:
		return expand(*e.a, order, arity, n) - expand(*e.b, order, arity, n);
	case Expr::Mul:
		return expand(*e.a, order, arity, n) * expand(*e.b, order, arity, n);
	case Expr::Div:
		return expand(*e.a, order, arity, n) * expand(*e.b, order, arity, n).inverse();
	case Expr::Neg:
		return -expand(*e.a, order, arity, n);
	case Expr::Ln:
		return expand(*e.a, order, arity, n).log1();
	case Expr::Exp:
		return expand(*e.a, order, arity, n).exp_val();
	case Expr::Pow: {
		HSeries base = expand(*e.a, order, arity, n);
		HSeries r = HSeries::constant(arity, order, Coeff(1));
		for (unsigned k = 0; k < e.pow_exp; ++k)
			r = r * base;
		return r;
	}
	case Expr::Lit:
		return HSeries::constant(arity, order, Coeff(e.lit));
	case Expr::Var: {
		int v = e.block * n + e.idx;
		require(e.idx < n, "expand_expr: variable index exceeds block width");
		require(v < arity, "expand_expr: variable outside ring arity");
		return HSeries::var(arity, order, v);
	}
	case Expr::Hbar:
		return HSeries::hbar(arity, order);
	case Expr::Eps:
		return HSeries::constant(arity, order, Coeff::eps());
	}
	fail("expand_expr: unreachable");
}

HSeries expand_expr(const Expr &e, int order, int arity, int block_width)
{
	return expand(e, order, arity, block_width);
}

HSeries expand_expr(const std::string &text, int order, int arity, int block_width)
{
	return expand(*parse_expr(text), order, arity, block_width);
}

MPoly parse_mpoly(const std::string &text, int arity, int block_width)
{
	if (block_width == 0)
		block_width = arity ? arity : 1;
	HSeries s = expand_expr(text, 1, arity, block_width);
	require(s.at(1).is_zero(), "polynomial context: 'h' is not allowed here");
	return s.at(0);
}

Coeff parse_coeff(const std::string &text)
{
	// arity-1 ring so that stray variables produce a clear error
	HSeries s = expand_expr(text, 1, 1, 1);
	require(s.at(1).is_zero(), "coefficient context: 'h' is not allowed here");
	require(s.at(0).is_constant(), "coefficient context: variables are not allowed here");
	return s.at(0).constant_term();
}

Rat parse_rat(const std::string &text)
{
	Coeff c = parse_coeff(text);
	require(c.is_rational(), "rational context: 'eps' is not allowed here");
	return c.rat();
}

} // namespace ybgeo
