#ifndef POWERLOG_PARSER_HPP
#define POWERLOG_PARSER_HPP

#include <string>

#include "powerlog/ode.hpp"
#include "powerlog/ratfunc.hpp"

namespace powerlog {

/* Expression grammar shared by equations and coefficient expressions:
 * integers, rationals a/b, the imaginary unit i, variables x, t,
 * y0..y99, operators + - * / ^, parentheses. ^ takes nonnegative integer
 * exponents; implicit multiplication is not allowed. Syntax errors carry
 * line/column.
 */

// Univariate in t; division is full field division.
RatFunc parse_ratfunc(const std::string &text);

// Polynomial in (x, y0..yn); division only by scalar constants.
// declared_order < 0 infers n from the highest y-index mentioned.
AlgebraicODE parse_ode(const std::string &text, int declared_order = -1);

} // namespace powerlog

#endif
