#include "sesstype/subtype.hpp"

namespace sesstype {

namespace {

// Every branch of `small` exists in `large`; continuations are compared
// with the `small` side on the left when `small_is_left`.
bool branches_within(const NormalForm::Branches& small, const NormalForm::Branches& large,
                     bool small_is_left) {
  for (const auto& [name, cont] : small) {
    auto it = large.find(name);
    if (it == large.end()) return false;
    const bool ok = small_is_left ? subtype_nf(cont, it->second) : subtype_nf(it->second, cont);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool subtype_nf(const NormalForm& n1, const NormalForm& n2) {
  if (n1.is_bottom() || n2.is_top()) return true;
  if (n1.is_top() || n2.is_bottom()) return false;

  using Shape = NormalForm::Shape;
  if (n1.shape() == Shape::InputUnion && n2.shape() == Shape::InputUnion) {
    if (n1.has_end() && !n2.has_end()) return false;
    return branches_within(n1.branches(), n2.branches(), true);
  }
  if (n1.shape() == Shape::OutputIntersection && n2.shape() == Shape::OutputIntersection) {
    if (n2.has_end() && !n1.has_end()) return false;
    return branches_within(n2.branches(), n1.branches(), false);
  }
  if (n1.shape() == Shape::OutputIntersection) return n1.has_end() && n2.has_end();
  return false;
}

bool subtype(const SessionType& t, const SessionType& s) {
  return subtype_nf(normalize(t), normalize(s));
}

bool equivalent(const SessionType& t, const SessionType& s) {
  const NormalForm a = normalize(t);
  const NormalForm b = normalize(s);
  return subtype_nf(a, b) && subtype_nf(b, a);
}

}  // namespace sesstype
