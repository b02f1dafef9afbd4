#ifndef MPTRI_PARSE_HPP
#define MPTRI_PARSE_HPP

#include <string_view>

#include "mptri/poly.hpp"

namespace mptri {

// Grammar: integers, identifiers, + - * ^, parentheses; explicit '*' required;
// '^' takes a non-negative integer literal and binds tighter than '*', which
// binds tighter than '+'/'-'; unary minus allowed.  Throws ParseError with the
// offending position.
Poly parse_poly(std::string_view text, const VarOrderPtr& order);

} // namespace mptri

#endif
