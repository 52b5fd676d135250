#pragma once

#include "sesstype/action.hpp"
#include "sesstype/errors.hpp"
#include "sesstype/global_type.hpp"
#include "sesstype/lts.hpp"
#include "sesstype/normal_form.hpp"
#include "sesstype/orthogonality.hpp"
#include "sesstype/process.hpp"
#include "sesstype/project.hpp"
#include "sesstype/semantics.hpp"
#include "sesstype/session_type.hpp"
#include "sesstype/subtype.hpp"
#include "sesstype/syntax.hpp"
#include "sesstype/typecheck.hpp"
