#include "sesstype/process.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hash_util.hpp"

namespace sesstype {

struct ProcessTerm::Node {
  ProcessKind kind;
  std::optional<Action> action;
  ProcessTerm first{NullTag{}};
  ProcessTerm second{NullTag{}};
  std::size_t size = 1;
  std::size_t height = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t action_hash(const Action& a) {
  return detail::mix(std::hash<std::string>{}(a.name.str()), static_cast<std::size_t>(a.polarity));
}

}  // namespace

ProcessTerm::ProcessTerm() : ProcessTerm(deadlock()) {}

ProcessTerm ProcessTerm::deadlock() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = ProcessKind::Deadlock;
    n->hash = 0x5eed0;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return ProcessTerm(node);
}

ProcessTerm ProcessTerm::success() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = ProcessKind::Success;
    n->hash = 0x5eed1;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return ProcessTerm(node);
}

ProcessTerm ProcessTerm::prefix(Action action, ProcessTerm continuation) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Prefix;
  n->size = 1 + continuation.size();
  n->height = 1 + continuation.height();
  n->hash = detail::mix(detail::mix(2, action_hash(action)), continuation.hash());
  n->action = std::move(action);
  n->first = std::move(continuation);
  return ProcessTerm(std::shared_ptr<const Node>(std::move(n)));
}

ProcessTerm ProcessTerm::internal_choice(ProcessTerm left, ProcessTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::InternalChoice;
  n->size = 1 + left.size() + right.size();
  n->height = 1 + std::max(left.height(), right.height());
  n->hash = detail::mix(detail::mix(3, left.hash()), right.hash());
  n->first = std::move(left);
  n->second = std::move(right);
  return ProcessTerm(std::shared_ptr<const Node>(std::move(n)));
}

ProcessTerm ProcessTerm::external_choice(ProcessTerm left, ProcessTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::ExternalChoice;
  n->size = 1 + left.size() + right.size();
  n->height = 1 + std::max(left.height(), right.height());
  n->hash = detail::mix(detail::mix(4, left.hash()), right.hash());
  n->first = std::move(left);
  n->second = std::move(right);
  return ProcessTerm(std::shared_ptr<const Node>(std::move(n)));
}

ProcessKind ProcessTerm::kind() const noexcept { return node_->kind; }

const Action& ProcessTerm::action() const {
  if (kind() != ProcessKind::Prefix) throw std::logic_error("action() on a non-prefix process");
  return *node_->action;
}

const ProcessTerm& ProcessTerm::continuation() const {
  if (kind() != ProcessKind::Prefix) throw std::logic_error("continuation() on a non-prefix process");
  return node_->first;
}

const ProcessTerm& ProcessTerm::left() const {
  if (!is_choice()) throw std::logic_error("left() on a non-choice process");
  return node_->first;
}

const ProcessTerm& ProcessTerm::right() const {
  if (!is_choice()) throw std::logic_error("right() on a non-choice process");
  return node_->second;
}

std::size_t ProcessTerm::size() const noexcept { return node_->size; }
std::size_t ProcessTerm::height() const noexcept { return node_->height; }
std::size_t ProcessTerm::hash() const noexcept { return node_->hash; }

bool operator==(const ProcessTerm& a, const ProcessTerm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.size != y.size || x.kind != y.kind) return false;
  switch (x.kind) {
    case ProcessKind::Deadlock:
    case ProcessKind::Success:
      return true;
    case ProcessKind::Prefix:
      return *x.action == *y.action && x.first == y.first;
    case ProcessKind::InternalChoice:
    case ProcessKind::ExternalChoice:
      return x.first == y.first && x.second == y.second;
  }
  return false;
}

}  // namespace sesstype
