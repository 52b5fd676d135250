#include "sesstype/semantics.hpp"

#include <stdexcept>

namespace sesstype {

SessionType dual(const SessionType& t) {
  switch (t.kind()) {
    case TypeKind::Bottom: return SessionType::top();
    case TypeKind::Top: return SessionType::bottom();
    case TypeKind::End: return SessionType::end();
    case TypeKind::Prefix: return SessionType::prefix(t.action().co(), dual(t.continuation()));
    case TypeKind::Intersection: return SessionType::union_of(dual(t.left()), dual(t.right()));
    case TypeKind::Union: return SessionType::intersection(dual(t.left()), dual(t.right()));
  }
  throw std::logic_error("unknown session type kind");
}

bool member(LtsCache& cache, const ProcessTerm& p, const NormalForm& n) {
  if (n.is_bottom()) return false;
  if (n.is_top()) return true;

  if (n.shape() == NormalForm::Shape::InputUnion) {
    // p may converge and each of its possible outputs is accepted by n.
    if (!cache.may_converge(p)) return false;
    for (const Label& mu : cache.weak_labels(p)) {
      if (mu.is_input()) continue;
      if (mu.is_success()) {
        if (!n.has_end()) return false;
        continue;
      }
      auto it = n.branches().find(mu.action().name);
      if (it == n.branches().end()) return false;
      if (!member(cache, cache.continuation(p, mu), it->second)) return false;
    }
    return true;
  }

  // p must converge and is guaranteed to accept every message n may send.
  if (!cache.must_converge(p)) return false;
  if (n.has_end() && !cache.must(p, Label::success())) return false;
  for (const auto& [name, cont] : n.branches()) {
    const Label mu(Action{Polarity::Input, name});
    if (!cache.must(p, mu)) return false;
    if (!member(cache, cache.continuation(p, mu), cont)) return false;
  }
  return true;
}

bool member(const ProcessTerm& p, const NormalForm& n) {
  LtsCache cache;
  return member(cache, p, n);
}

bool member_type(const ProcessTerm& p, const SessionType& t) { return member(p, normalize(t)); }

}  // namespace sesstype
