#include "sesstype/typecheck.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sesstype/errors.hpp"
#include "sesstype/subtype.hpp"
#include "sesstype/syntax.hpp"

namespace sesstype {

namespace {

void collect_summands(const ProcessTerm& p, std::vector<ProcessTerm>& out) {
  if (p.kind() == ProcessKind::ExternalChoice) {
    collect_summands(p.left(), out);
    collect_summands(p.right(), out);
  } else {
    out.push_back(p);
  }
}

SessionType fold(std::vector<SessionType> parts, bool intersect) {
  SessionType acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = intersect ? SessionType::intersection(acc, parts[i]) : SessionType::union_of(acc, parts[i]);
  }
  return acc;
}

SessionType receive_type(const ProcessTerm& sum) {
  std::vector<ProcessTerm> summands;
  collect_summands(sum, summands);
  std::map<ActionName, std::vector<SessionType>> by_name;
  for (const ProcessTerm& s : summands) {
    if (s.kind() != ProcessKind::Prefix || !s.action().is_input()) {
      throw Untypeable("external choice summand is not an input prefix: " + render_process(s));
    }
    by_name[s.action().name].push_back(canonical_type(s.continuation()));
  }
  std::vector<SessionType> branches;
  for (auto& [name, bodies] : by_name) {
    branches.push_back(SessionType::prefix({Polarity::Input, name}, fold(std::move(bodies), true)));
  }
  return fold(std::move(branches), false);
}

}  // namespace

SessionType canonical_type(const ProcessTerm& p) {
  switch (p.kind()) {
    case ProcessKind::Deadlock: return SessionType::bottom();
    case ProcessKind::Success: return SessionType::end();
    case ProcessKind::Prefix:
      if (p.action().is_output()) return SessionType::prefix(p.action(), canonical_type(p.continuation()));
      return receive_type(p);
    case ProcessKind::ExternalChoice: return receive_type(p);
    case ProcessKind::InternalChoice:
      return SessionType::intersection(canonical_type(p.left()), canonical_type(p.right()));
  }
  throw std::logic_error("unknown process kind");
}

bool check(const SessionType& t, const ProcessTerm& p) {
  std::optional<SessionType> canon;
  try {
    canon = canonical_type(p);
  } catch (const Untypeable&) {
    return false;
  }
  return subtype(t, *canon);
}

}  // namespace sesstype
