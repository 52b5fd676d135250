#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>

#include "sesstype/action.hpp"

namespace sesstype {

enum class TypeKind : std::uint8_t {
  Bottom,        // Bot
  Top,           // Top
  End,           // end
  Prefix,        // α.T
  Intersection,  // T & S
  Union,         // T | S
};

/// Immutable finite session type tree with structural equality.
class SessionType {
 public:
  /// `end`.
  SessionType();

  static SessionType bottom();
  static SessionType top();
  static SessionType end();
  static SessionType prefix(Action action, SessionType continuation);
  static SessionType intersection(SessionType left, SessionType right);
  static SessionType union_of(SessionType left, SessionType right);

  TypeKind kind() const noexcept;
  bool is_binary() const noexcept {
    return kind() == TypeKind::Intersection || kind() == TypeKind::Union;
  }

  const Action& action() const;
  const SessionType& continuation() const;
  const SessionType& left() const;
  const SessionType& right() const;

  std::size_t size() const noexcept;
  std::size_t height() const noexcept;
  /// Maximum number of nested actions.
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const SessionType& a, const SessionType& b);

 private:
  struct Node;
  struct NullTag {};
  explicit SessionType(NullTag) noexcept {}
  explicit SessionType(std::shared_ptr<const Node> node) noexcept : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace sesstype

template <>
struct std::hash<sesstype::SessionType> {
  std::size_t operator()(const sesstype::SessionType& t) const noexcept { return t.hash(); }
};
