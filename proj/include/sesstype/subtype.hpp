#pragma once

#include "sesstype/normal_form.hpp"
#include "sesstype/session_type.hpp"

namespace sesstype {

/// Algorithmic subtyping on normal forms.
bool subtype_nf(const NormalForm& n1, const NormalForm& n2);

/// ⟦t⟧ ⊆ ⟦s⟧, decided on normal forms.
bool subtype(const SessionType& t, const SessionType& s);
bool equivalent(const SessionType& t, const SessionType& s);

}  // namespace sesstype
