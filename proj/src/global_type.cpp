#include "sesstype/global_type.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "sesstype/errors.hpp"

namespace sesstype {

namespace {

bool is_tail_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool RoleName::is_valid(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'A' || name.front() > 'Z') return false;
  for (char c : name.substr(1)) {
    if (!is_tail_char(c)) return false;
  }
  return true;
}

RoleName::RoleName(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) throw std::invalid_argument("invalid role name '" + name_ + "'");
}

struct GlobalType::Node {
  Kind kind = Kind::End;
  std::optional<RoleName> sender;
  std::optional<RoleName> receiver;
  std::optional<ActionName> label;
  std::vector<GlobalType> children;
  std::set<RoleName> roles;
};

namespace {

void check_role_count(const std::set<RoleName>& roles) {
  if (roles.size() > 2) {
    std::string names;
    for (const auto& r : roles) names += (names.empty() ? "" : ", ") + r.str();
    throw RoleError("global type mentions more than two roles: " + names);
  }
}

}  // namespace

GlobalType GlobalType::end() {
  static const auto node = std::make_shared<const Node>();
  return GlobalType(node);
}

GlobalType GlobalType::message(RoleName sender, RoleName receiver, ActionName label,
                               GlobalType continuation) {
  if (sender == receiver) {
    throw RoleError("role " + sender.str() + " cannot send a message to itself");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Message;
  n->roles = continuation.roles();
  n->roles.insert(sender);
  n->roles.insert(receiver);
  check_role_count(n->roles);
  n->sender = std::move(sender);
  n->receiver = std::move(receiver);
  n->label = std::move(label);
  n->children.push_back(std::move(continuation));
  return GlobalType(std::move(n));
}

GlobalType GlobalType::choice(GlobalType left, GlobalType right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Choice;
  n->roles = left.roles();
  n->roles.insert(right.roles().begin(), right.roles().end());
  check_role_count(n->roles);
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return GlobalType(std::move(n));
}

GlobalType::Kind GlobalType::kind() const noexcept { return node_->kind; }

const RoleName& GlobalType::sender() const {
  if (kind() != Kind::Message) throw std::logic_error("sender() on a non-message global type");
  return *node_->sender;
}

const RoleName& GlobalType::receiver() const {
  if (kind() != Kind::Message) throw std::logic_error("receiver() on a non-message global type");
  return *node_->receiver;
}

const ActionName& GlobalType::label() const {
  if (kind() != Kind::Message) throw std::logic_error("label() on a non-message global type");
  return *node_->label;
}

const GlobalType& GlobalType::continuation() const {
  if (kind() != Kind::Message) throw std::logic_error("continuation() on a non-message global type");
  return node_->children[0];
}

const GlobalType& GlobalType::left() const {
  if (kind() != Kind::Choice) throw std::logic_error("left() on a non-choice global type");
  return node_->children[0];
}

const GlobalType& GlobalType::right() const {
  if (kind() != Kind::Choice) throw std::logic_error("right() on a non-choice global type");
  return node_->children[1];
}

const std::set<RoleName>& GlobalType::roles() const noexcept { return node_->roles; }

bool operator==(const GlobalType& a, const GlobalType& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.sender == y.sender && x.receiver == y.receiver &&
         x.label == y.label && x.children == y.children;
}

}  // namespace sesstype
