#pragma once

#include "sesstype/lts.hpp"
#include "sesstype/normal_form.hpp"
#include "sesstype/process.hpp"
#include "sesstype/session_type.hpp"

namespace sesstype {

/// Syntactic dual: Bot <-> Top, end fixed, polarities flipped, & <-> |.
/// Its semantics is the set of processes orthogonal to every member of `t`.
SessionType dual(const SessionType& t);

/// Decides p ∈ ⟦n⟧ by recursion on the normal form.
bool member(const ProcessTerm& p, const NormalForm& n);
bool member(LtsCache& cache, const ProcessTerm& p, const NormalForm& n);

/// member(p, normalize(t)).
bool member_type(const ProcessTerm& p, const SessionType& t);

}  // namespace sesstype
