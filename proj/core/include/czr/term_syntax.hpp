#pragma once

#include "czr/syntax_error.hpp"
#include "czr/term.hpp"

#include <string_view>

namespace czr {

/// Parses the term surface syntax:
///   lam x. t   t u   <t1,...,tn>   t.i   t.(u)   #t   fix t
///   ifz t then u else v   succ t   pred t   numerals   (t)
/// Application is left-associative, projection binds tighter than
/// application, and lambda bodies extend as far right as possible.
/// Free identifiers are kept as Var nodes.
TermPtr parse_term(std::string_view text);

}  // namespace czr
