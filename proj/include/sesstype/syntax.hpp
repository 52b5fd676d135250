#pragma once

#include <string>
#include <string_view>

#include "sesstype/global_type.hpp"
#include "sesstype/process.hpp"
#include "sesstype/session_type.hpp"

namespace sesstype {

// Concrete syntax, tightest binding first:
//
//   processes      a  !a  0  1   prefix `.`   `+`   `(+)`
//   session types  a  !a  Bot Top end   prefix `.`   `&`   `|`
//   global types   A->B:a; G   `[]`   end
//
// Binary operators are left-associative. A prefix without a continuation
// stands for `α.1` in processes and `α.end` in types.

/// Throws SyntaxError.
ProcessTerm parse_process(std::string_view text);
/// Throws SyntaxError.
SessionType parse_type(std::string_view text);
/// Throws SyntaxError, or RoleError when the term mentions more than two
/// roles or a message has the same sender and receiver.
GlobalType parse_global(std::string_view text);

// Renderers emit minimal parentheses and satisfy parse(render(x)) == x.
// Processes drop trailing `.1`; types always spell out `.end`.
std::string render_process(const ProcessTerm& p);
std::string render_type(const SessionType& t);
std::string render_global(const GlobalType& g);

}  // namespace sesstype
