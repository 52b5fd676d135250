#include "sesstype/project.hpp"

#include <stdexcept>

#include "sesstype/errors.hpp"
#include "sesstype/normal_form.hpp"
#include "sesstype/syntax.hpp"

namespace sesstype {

namespace {

const RoleName& first_sender(const GlobalType& g) {
  switch (g.kind()) {
    case GlobalType::Kind::Message: return g.sender();
    case GlobalType::Kind::Choice: {
      const RoleName& l = first_sender(g.left());
      const RoleName& r = first_sender(g.right());
      if (l != r) {
        throw ProjectionError("choice branches start with different senders: " + l.str() +
                              " and " + r.str());
      }
      return l;
    }
    case GlobalType::Kind::End: break;
  }
  throw ProjectionError("choice branch is 'end': " + render_global(g));
}

NormalForm project_nf(const GlobalType& g, const RoleName& role) {
  switch (g.kind()) {
    case GlobalType::Kind::End: return NormalForm::end();
    case GlobalType::Kind::Message: {
      const Polarity pol = g.sender() == role ? Polarity::Output : Polarity::Input;
      return prefix_nf({pol, g.label()}, project_nf(g.continuation(), role));
    }
    case GlobalType::Kind::Choice: {
      const bool chooser = first_sender(g) == role;
      NormalForm l = project_nf(g.left(), role);
      NormalForm r = project_nf(g.right(), role);
      return chooser ? meet_nf(l, r) : join_nf(l, r);
    }
  }
  throw std::logic_error("unknown global type kind");
}

}  // namespace

SessionType project(const GlobalType& g, const RoleName& role) {
  if (!g.roles().empty() && !g.roles().contains(role)) {
    throw ProjectionError("role " + role.str() + " does not occur in " + render_global(g));
  }
  NormalForm n = project_nf(g, role);
  if (!n.is_viable()) {
    throw ProjectionError("projection onto " + role.str() + " is " +
                          (n.is_bottom() ? "Bot" : "Top"));
  }
  return embed(n);
}

}  // namespace sesstype
