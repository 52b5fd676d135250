#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>

#include "sesstype/action.hpp"

namespace sesstype {

enum class ProcessKind : std::uint8_t {
  Deadlock,        // 0
  Success,         // 1
  Prefix,          // α.P
  InternalChoice,  // P (+) Q
  ExternalChoice,  // P + Q
};

/// Immutable finite process tree. Copies share structure; equality is
/// structural.
class ProcessTerm {
 public:
  /// The deadlocked process 0.
  ProcessTerm();

  static ProcessTerm deadlock();
  static ProcessTerm success();
  static ProcessTerm prefix(Action action, ProcessTerm continuation);
  static ProcessTerm internal_choice(ProcessTerm left, ProcessTerm right);
  static ProcessTerm external_choice(ProcessTerm left, ProcessTerm right);

  ProcessKind kind() const noexcept;
  bool is_choice() const noexcept {
    return kind() == ProcessKind::InternalChoice || kind() == ProcessKind::ExternalChoice;
  }

  // Prefix only.
  const Action& action() const;
  const ProcessTerm& continuation() const;
  // Choices only.
  const ProcessTerm& left() const;
  const ProcessTerm& right() const;

  /// Node count; also the termination measure for internal reduction.
  std::size_t size() const noexcept;
  /// Longest root-to-leaf path; 0 and 1 have height 0.
  std::size_t height() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const ProcessTerm& a, const ProcessTerm& b);

 private:
  struct Node;
  struct NullTag {};
  explicit ProcessTerm(NullTag) noexcept {}
  explicit ProcessTerm(std::shared_ptr<const Node> node) noexcept : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace sesstype

template <>
struct std::hash<sesstype::ProcessTerm> {
  std::size_t operator()(const sesstype::ProcessTerm& p) const noexcept { return p.hash(); }
};
