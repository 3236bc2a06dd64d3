#include "bvw/expr.hpp"

#include <cctype>

namespace bvw {

namespace {

struct Parser {
	VarTablePtr tab;
	std::string const &src;
	std::size_t pos = 0;
	int line = 1, col = 1;

	Parser(VarTablePtr t, std::string const &s) : tab(std::move(t)), src(s) {}

	[[noreturn]] void fail(std::string const &what) const { throw ParseError(line, col, what); }

	int peek() const { return pos < src.size() ? static_cast<unsigned char>(src[pos]) : -1; }

	int get()
	{
		int c = peek();
		if (c == -1)
			return -1;
		++pos;
		if (c == '\n')
		{
			++line;
			col = 1;
		}
		else
			++col;
		return c;
	}

	void skip_ws()
	{
		while (std::isspace(peek()))
			get();
	}

	bool eat(char c)
	{
		skip_ws();
		if (peek() == c)
		{
			get();
			return true;
		}
		return false;
	}

	Poly parse()
	{
		Poly p = sum();
		skip_ws();
		if (peek() != -1)
			fail("unexpected trailing input");
		return p;
	}

	Poly sum()
	{
		skip_ws();
		bool neg = false;
		while (true)
		{
			if (eat('-'))
				neg = !neg;
			else if (!eat('+'))
				break;
		}
		Poly p = product();
		if (neg)
			p = -p;
		while (true)
		{
			skip_ws();
			int c = peek();
			if (c != '+' && c != '-')
				break;
			get();
			Poly q = product();
			if (c == '+')
				p += q;
			else
				p -= q;
		}
		return p;
	}

	Poly product()
	{
		Poly p = power();
		while (true)
		{
			skip_ws();
			int c = peek();
			if (c == '*')
			{
				get();
				p = p * power();
			}
			else if (c == '(' || std::isalpha(c) || std::isdigit(c))
				p = p * power(); // juxtaposition
			else
				break;
		}
		return p;
	}

	Poly power()
	{
		Poly base = atom();
		skip_ws();
		if (peek() == '^')
		{
			get();
			skip_ws();
			if (!std::isdigit(peek()))
				fail("exponent must be a nonnegative integer");
			long e = integer();
			Poly r = Poly::constant(tab, RadicalScalar(1));
			for (long k = 0; k < e; ++k)
				r = r * base;
			return r;
		}
		return base;
	}

	long integer()
	{
		long v = 0;
		while (std::isdigit(peek()))
			v = v * 10 + (get() - '0');
		return v;
	}

	Poly atom()
	{
		skip_ws();
		int c = peek();
		if (c == '(')
		{
			get();
			Poly p = sum();
			if (!eat(')'))
				fail("expected ')'");
			return p;
		}
		if (std::isdigit(c))
		{
			long num = integer();
			if (eat('/'))
			{
				skip_ws();
				if (!std::isdigit(peek()))
					fail("expected denominator");
				long den = integer();
				if (den == 0)
					fail("zero denominator");
				return Poly::constant(tab, RadicalScalar(Rational(num, den)));
			}
			return Poly::constant(tab, RadicalScalar(num));
		}
		if (std::isalpha(c))
		{
			std::string name;
			while (std::isalnum(peek()) || peek() == '*' || peek() == '_')
			{
				// '*' only binds into the name for the starred spellings x*1
				if (peek() == '*')
				{
					std::size_t save = pos;
					std::string candidate = name + "*";
					std::size_t p2 = pos + 1;
					while (p2 < src.size() &&
					       std::isdigit(static_cast<unsigned char>(src[p2])))
						candidate += src[p2++];
					if (tab->find(candidate) == -1)
						break;
					(void)save;
				}
				name += static_cast<char>(get());
			}
			int id = tab->find(name);
			if (id == -1)
				fail("unknown identifier '" + name + "'");
			return Poly::variable(tab, id);
		}
		fail("expected a term");
	}
};

} // namespace

Poly parse_polynomial(VarTablePtr const &tab, std::string const &src)
{
	Parser p(tab, src);
	return p.parse();
}

} // namespace bvw
