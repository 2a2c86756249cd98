#ifndef RECURV_EXPR_HPP
#define RECURV_EXPR_HPP

#include <string>

#include "recurv/chart.hpp"
#include "recurv/rational_function.hpp"

namespace recurv {

// Parses the manifest expression grammar into a canonical rational function.
// Grammar: rational literals (3, -2, 5/7), coordinate identifiers, + - * / ^
// with integer exponents, parentheses. ^ binds tightest, then unary minus,
// then * /, then + -. Negative exponents fold into the denominator.
// Throws ParseError with a byte position on malformed input or unknown
// identifiers; DivisionByZeroError on division by the zero polynomial.
RationalFunction parse_expression(const std::string& text, const Chart& chart);

} // namespace recurv

#endif
