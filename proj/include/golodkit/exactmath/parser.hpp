#pragma once

#include <string_view>

#include "golodkit/exactmath/polynomial.hpp"

namespace golodkit {

// Recursive-descent parser for
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | ident | '(' expr ')' | '-' base
//
// Identifiers and integers are maximal munches; whitespace between tokens is
// ignored; juxtaposition is not multiplication. Note that "-x^2" parses as
// (-x)^2 under this grammar.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx);

bool is_identifier(std::string_view name);

}  // namespace golodkit
