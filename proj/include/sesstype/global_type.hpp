#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "sesstype/action.hpp"

namespace sesstype {

/// Participant of a global type; matches `[A-Z][a-zA-Z0-9_]*`.
class RoleName {
 public:
  explicit RoleName(std::string name);

  static bool is_valid(std::string_view name) noexcept;

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const RoleName&, const RoleName&) = default;
  friend std::strong_ordering operator<=>(const RoleName& a, const RoleName& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

/// Two-party global type: `end`, `A->B:a; G`, or `G [] G`.
///
/// Construction enforces sender != receiver and at most two roles overall,
/// throwing RoleError otherwise.
class GlobalType {
 public:
  enum class Kind { End, Message, Choice };

  static GlobalType end();
  static GlobalType message(RoleName sender, RoleName receiver, ActionName label,
                            GlobalType continuation);
  static GlobalType choice(GlobalType left, GlobalType right);

  Kind kind() const noexcept;

  // Message only.
  const RoleName& sender() const;
  const RoleName& receiver() const;
  const ActionName& label() const;
  const GlobalType& continuation() const;
  // Choice only.
  const GlobalType& left() const;
  const GlobalType& right() const;

  /// Every role mentioned anywhere in the term (at most two).
  const std::set<RoleName>& roles() const noexcept;

  friend bool operator==(const GlobalType& a, const GlobalType& b);

 private:
  struct Node;
  explicit GlobalType(std::shared_ptr<const Node> node) noexcept : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace sesstype
