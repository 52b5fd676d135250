#pragma once

#include "sesstype/process.hpp"
#include "sesstype/session_type.hpp"

namespace sesstype {

/// The type derived for `p` rule by rule, without subsumption:
///   0 : Bot,  1 : end,  !a.P : !a.T,  P (+) Q : T & S,
///   Σ aᵢ.Pᵢ : one union branch per distinct name, the meet of its bodies.
/// Throws Untypeable when an external choice has a summand that is not an
/// input prefix.
SessionType canonical_type(const ProcessTerm& p);

/// True iff `t` is a subtype of canonical_type(p); false if `p` is untypeable.
bool check(const SessionType& t, const ProcessTerm& p);

}  // namespace sesstype
