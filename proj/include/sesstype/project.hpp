#pragma once

#include "sesstype/global_type.hpp"
#include "sesstype/session_type.hpp"

namespace sesstype {

/// Local type of `role` in `g`, in normal form. A choice becomes a meet for
/// the role that sends first in both branches and a join for the other.
///
/// Throws ProjectionError when the branches of a choice start with different
/// senders (or with `end`), when `role` does not occur in `g`, or when the
/// projection is equivalent to Bot or Top.
SessionType project(const GlobalType& g, const RoleName& role);

}  // namespace sesstype
