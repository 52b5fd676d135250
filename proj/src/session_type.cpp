#include "sesstype/session_type.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hash_util.hpp"

namespace sesstype {

struct SessionType::Node {
  TypeKind kind;
  std::optional<Action> action;
  SessionType first{NullTag{}};
  SessionType second{NullTag{}};
  std::size_t size = 1;
  std::size_t height = 0;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

namespace {

template <typename Node>
std::shared_ptr<const Node> leaf(TypeKind kind, std::size_t hash) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->hash = hash;
  return n;
}

}  // namespace

SessionType::SessionType() : SessionType(end()) {}

SessionType SessionType::bottom() {
  static const auto node = leaf<Node>(TypeKind::Bottom, 0x7e0);
  return SessionType(node);
}

SessionType SessionType::top() {
  static const auto node = leaf<Node>(TypeKind::Top, 0x7e1);
  return SessionType(node);
}

SessionType SessionType::end() {
  static const auto node = leaf<Node>(TypeKind::End, 0x7e2);
  return SessionType(node);
}

SessionType SessionType::prefix(Action action, SessionType continuation) {
  auto n = std::make_shared<Node>();
  n->kind = TypeKind::Prefix;
  n->size = 1 + continuation.size();
  n->height = 1 + continuation.height();
  n->depth = 1 + continuation.depth();
  n->hash = detail::mix(
      detail::mix(detail::mix(12, std::hash<std::string>{}(action.name.str())),
                  static_cast<std::size_t>(action.polarity)),
      continuation.hash());
  n->action = std::move(action);
  n->first = std::move(continuation);
  return SessionType(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

template <typename Node, typename Type>
std::shared_ptr<const Node> binary(TypeKind kind, Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = 1 + left.size() + right.size();
  n->height = 1 + std::max(left.height(), right.height());
  n->depth = std::max(left.depth(), right.depth());
  n->hash = detail::mix(detail::mix(10 + static_cast<std::size_t>(kind), left.hash()), right.hash());
  n->first = std::move(left);
  n->second = std::move(right);
  return n;
}

}  // namespace

SessionType SessionType::intersection(SessionType left, SessionType right) {
  return SessionType(binary<Node>(TypeKind::Intersection, std::move(left), std::move(right)));
}

SessionType SessionType::union_of(SessionType left, SessionType right) {
  return SessionType(binary<Node>(TypeKind::Union, std::move(left), std::move(right)));
}

TypeKind SessionType::kind() const noexcept { return node_->kind; }

const Action& SessionType::action() const {
  if (kind() != TypeKind::Prefix) throw std::logic_error("action() on a non-prefix type");
  return *node_->action;
}

const SessionType& SessionType::continuation() const {
  if (kind() != TypeKind::Prefix) throw std::logic_error("continuation() on a non-prefix type");
  return node_->first;
}

const SessionType& SessionType::left() const {
  if (!is_binary()) throw std::logic_error("left() on a non-binary type");
  return node_->first;
}

const SessionType& SessionType::right() const {
  if (!is_binary()) throw std::logic_error("right() on a non-binary type");
  return node_->second;
}

std::size_t SessionType::size() const noexcept { return node_->size; }
std::size_t SessionType::height() const noexcept { return node_->height; }
std::size_t SessionType::depth() const noexcept { return node_->depth; }
std::size_t SessionType::hash() const noexcept { return node_->hash; }

bool operator==(const SessionType& a, const SessionType& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.size != y.size || x.kind != y.kind) return false;
  switch (x.kind) {
    case TypeKind::Bottom:
    case TypeKind::Top:
    case TypeKind::End:
      return true;
    case TypeKind::Prefix:
      return *x.action == *y.action && x.first == y.first;
    case TypeKind::Intersection:
    case TypeKind::Union:
      return x.first == y.first && x.second == y.second;
  }
  return false;
}

}  // namespace sesstype
