#pragma once

// Tiny expression grammar for gauge-fixing fermions and hand-written
// polynomials: identifiers from the variable table (x1, C1, B1, h1, ...),
// rational literals (3, 5/2), +, -, *, ^ and parentheses. Parse errors carry
// line and column.

#include "bvw/graded.hpp"

namespace bvw {

struct ParseError : std::runtime_error {
	int line, column;
	ParseError(int line_, int col, std::string const &what)
	    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
	                         std::to_string(col) + ": " + what),
	      line(line_), column(col) {}
};

Poly parse_polynomial(VarTablePtr const &tab, std::string const &src);

} // namespace bvw
