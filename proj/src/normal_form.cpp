#include "sesstype/normal_form.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "hash_util.hpp"
#include "sesstype/syntax.hpp"

namespace sesstype {

struct NormalForm::Rep {
  Shape shape;
  bool has_end;
  Branches branches;
  std::size_t hash;
};

namespace {

using Shape = NormalForm::Shape;
using Branches = NormalForm::Branches;

}  // namespace

NormalForm NormalForm::make(Shape shape, Branches branches, bool has_end) {
  if (shape == Shape::OutputIntersection && branches.empty() && has_end) return end();
  std::size_t h = detail::mix(static_cast<std::size_t>(shape) * 2 + (has_end ? 1 : 0), 0x4e46);
  for (const auto& [name, cont] : branches) {
    if (!cont.is_viable()) {
      throw std::invalid_argument("normal form branch '" + name.str() + "' is not viable");
    }
    h = detail::mix(detail::mix(h, std::hash<std::string>{}(name.str())), cont.hash());
  }
  return NormalForm(std::make_shared<const Rep>(Rep{shape, has_end, std::move(branches), h}));
}

NormalForm NormalForm::bottom() {
  static const NormalForm n = make(Shape::InputUnion, {}, false);
  return n;
}

NormalForm NormalForm::top() {
  static const NormalForm n = make(Shape::OutputIntersection, {}, false);
  return n;
}

NormalForm NormalForm::end() {
  static const NormalForm n = make(Shape::InputUnion, {}, true);
  return n;
}

NormalForm::Shape NormalForm::shape() const noexcept { return rep_->shape; }
bool NormalForm::has_end() const noexcept { return rep_->has_end; }
const NormalForm::Branches& NormalForm::branches() const noexcept { return rep_->branches; }

bool NormalForm::is_bottom() const noexcept {
  return rep_->shape == Shape::InputUnion && rep_->branches.empty() && !rep_->has_end;
}

bool NormalForm::is_top() const noexcept {
  return rep_->shape == Shape::OutputIntersection && rep_->branches.empty() && !rep_->has_end;
}

bool NormalForm::is_end() const noexcept {
  return rep_->shape == Shape::InputUnion && rep_->branches.empty() && rep_->has_end;
}

std::size_t NormalForm::hash() const noexcept { return rep_->hash; }

bool operator==(const NormalForm& a, const NormalForm& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->hash == b.rep_->hash && a.rep_->shape == b.rep_->shape &&
         a.rep_->has_end == b.rep_->has_end && a.rep_->branches == b.rep_->branches;
}

NormalForm prefix_nf(const Action& action, const NormalForm& n) {
  if (!n.is_viable()) return n;
  const Shape shape = action.is_input() ? Shape::InputUnion : Shape::OutputIntersection;
  return NormalForm::make(shape, {{action.name, n}}, false);
}

// In a union of inputs a Bot continuation drops its branch (a.Bot = Bot is
// neutral for |) and a Top continuation absorbs the whole union. In an
// intersection of outputs the roles of Bot and Top are swapped.
namespace {

enum class Absorb { Keep, Drop, Collapse };

Absorb classify(Shape shape, const NormalForm& cont) {
  if (cont.is_viable()) return Absorb::Keep;
  const bool neutral = shape == Shape::InputUnion ? cont.is_bottom() : cont.is_top();
  return neutral ? Absorb::Drop : Absorb::Collapse;
}

NormalForm collapsed(Shape shape) {
  return shape == Shape::InputUnion ? NormalForm::top() : NormalForm::bottom();
}

// Branches present on both sides, merged with `combine`.
template <typename Combine>
std::optional<Branches> merge_shared(Shape shape, const Branches& a, const Branches& b,
                                     Combine combine) {
  Branches out;
  for (const auto& [name, cont] : a) {
    auto it = b.find(name);
    if (it == b.end()) continue;
    auto merged = combine(cont, it->second);
    switch (classify(shape, merged)) {
      case Absorb::Keep: out.emplace(name, std::move(merged)); break;
      case Absorb::Drop: break;
      case Absorb::Collapse: return std::nullopt;
    }
  }
  return out;
}

// Branches from either side; shared names merged with `combine`.
template <typename Combine>
std::optional<Branches> merge_all(Shape shape, const Branches& a, const Branches& b,
                                  Combine combine) {
  Branches out = a;
  for (const auto& [name, cont] : b) {
    auto it = out.find(name);
    if (it == out.end()) {
      out.emplace(name, cont);
      continue;
    }
    auto merged = combine(it->second, cont);
    switch (classify(shape, merged)) {
      case Absorb::Keep: it->second = std::move(merged); break;
      case Absorb::Drop: out.erase(it); break;
      case Absorb::Collapse: return std::nullopt;
    }
  }
  return out;
}

}  // namespace

NormalForm meet_nf(const NormalForm& a, const NormalForm& b) {
  if (a.is_bottom() || b.is_bottom()) return NormalForm::bottom();
  if (a.is_top()) return b;
  if (b.is_top()) return a;

  if (a.shape() == b.shape()) {
    const Shape shape = a.shape();
    if (shape == Shape::InputUnion) {
      // e-input-input: only messages both sides accept survive.
      auto branches = merge_shared(shape, a.branches(), b.branches(), meet_nf);
      if (!branches) return collapsed(shape);
      return NormalForm::make(shape, std::move(*branches), a.has_end() && b.has_end());
    }
    // Outputs accumulate; shared labels factor through e-dist.
    auto branches = merge_all(shape, a.branches(), b.branches(), meet_nf);
    if (!branches) return collapsed(shape);
    return NormalForm::make(shape, std::move(*branches), a.has_end() || b.has_end());
  }

  const NormalForm& in = a.shape() == Shape::InputUnion ? a : b;
  const NormalForm& out = a.shape() == Shape::InputUnion ? b : a;
  // e-input-output-end, or e-input-output / e-input-end.
  if (in.has_end()) return NormalForm::make(Shape::OutputIntersection, out.branches(), true);
  return NormalForm::bottom();
}

NormalForm join_nf(const NormalForm& a, const NormalForm& b) {
  if (a.is_top() || b.is_top()) return NormalForm::top();
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;

  if (a.shape() == b.shape()) {
    const Shape shape = a.shape();
    if (shape == Shape::OutputIntersection) {
      // Only messages that can be sent in both cases survive.
      auto branches = merge_shared(shape, a.branches(), b.branches(), join_nf);
      if (!branches) return collapsed(shape);
      return NormalForm::make(shape, std::move(*branches), a.has_end() && b.has_end());
    }
    auto branches = merge_all(shape, a.branches(), b.branches(), join_nf);
    if (!branches) return collapsed(shape);
    return NormalForm::make(shape, std::move(*branches), a.has_end() || b.has_end());
  }

  const NormalForm& in = a.shape() == Shape::InputUnion ? a : b;
  const NormalForm& out = a.shape() == Shape::InputUnion ? b : a;
  if (out.has_end()) return NormalForm::make(Shape::InputUnion, in.branches(), true);
  return NormalForm::top();
}

NormalForm dual_nf(const NormalForm& n) {
  Branches branches;
  for (const auto& [name, cont] : n.branches()) branches.emplace(name, dual_nf(cont));
  const Shape flipped =
      n.shape() == Shape::InputUnion ? Shape::OutputIntersection : Shape::InputUnion;
  return NormalForm::make(flipped, std::move(branches), n.has_end());
}

NormalForm normalize(const SessionType& t) {
  switch (t.kind()) {
    case TypeKind::Bottom: return NormalForm::bottom();
    case TypeKind::Top: return NormalForm::top();
    case TypeKind::End: return NormalForm::end();
    case TypeKind::Prefix: return prefix_nf(t.action(), normalize(t.continuation()));
    case TypeKind::Intersection: return meet_nf(normalize(t.left()), normalize(t.right()));
    case TypeKind::Union: return join_nf(normalize(t.left()), normalize(t.right()));
  }
  throw std::logic_error("unknown session type kind");
}

SessionType embed(const NormalForm& n) {
  if (n.is_bottom()) return SessionType::bottom();
  if (n.is_top()) return SessionType::top();
  const bool input = n.shape() == Shape::InputUnion;
  std::optional<SessionType> acc;
  auto add = [&](SessionType t) {
    if (!acc) {
      acc = std::move(t);
    } else if (input) {
      acc = SessionType::union_of(std::move(*acc), std::move(t));
    } else {
      acc = SessionType::intersection(std::move(*acc), std::move(t));
    }
  };
  for (const auto& [name, cont] : n.branches()) {
    add(SessionType::prefix({input ? Polarity::Input : Polarity::Output, name}, embed(cont)));
  }
  if (n.has_end()) add(SessionType::end());
  return *acc;
}

NormalForm meet(const SessionType& t, const SessionType& s) {
  return normalize(SessionType::intersection(t, s));
}

NormalForm join(const SessionType& t, const SessionType& s) {
  return normalize(SessionType::union_of(t, s));
}

bool viable(const SessionType& t) { return normalize(t).is_viable(); }

std::string render_normal_form(const NormalForm& n) { return render_type(embed(n)); }

}  // namespace sesstype
