#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "sesstype/session_type.hpp"

namespace sesstype {

/// Canonical session type: either a union of input-prefixed branches, or an
/// intersection of output-prefixed branches, each optionally joined with
/// `end`. Branches are keyed by name, so equality is equality up to
/// associativity and commutativity.
///
/// Invariants: every branch continuation is viable; Bot is an empty union,
/// Top an empty intersection, and `end` is always the union {∅, end}.
class NormalForm {
 public:
  enum class Shape : std::uint8_t { InputUnion, OutputIntersection };
  using Branches = std::map<ActionName, NormalForm>;

  static NormalForm bottom();
  static NormalForm top();
  static NormalForm end();

  /// Builds a normal form, mapping the intersection {∅, end} to `end`.
  /// Throws std::invalid_argument if a branch continuation is Bot or Top.
  static NormalForm make(Shape shape, Branches branches, bool has_end);

  Shape shape() const noexcept;
  bool has_end() const noexcept;
  const Branches& branches() const noexcept;

  bool is_bottom() const noexcept;
  bool is_top() const noexcept;
  bool is_end() const noexcept;
  bool is_viable() const noexcept { return !is_bottom() && !is_top(); }

  std::size_t hash() const noexcept;

  friend bool operator==(const NormalForm& a, const NormalForm& b);

 private:
  struct Rep;
  explicit NormalForm(std::shared_ptr<const Rep> rep) noexcept : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

NormalForm normalize(const SessionType& t);

/// Maps a normal form back to a session type; branches in name order,
/// `end` last, operators folded to the left.
SessionType embed(const NormalForm& n);

/// Normal form of `α.n`: prefixes are absorbed by Bot and Top.
NormalForm prefix_nf(const Action& action, const NormalForm& n);
NormalForm meet_nf(const NormalForm& a, const NormalForm& b);
NormalForm join_nf(const NormalForm& a, const NormalForm& b);
/// Pointwise dual: flips shape and polarity, Bot <-> Top, end stays end.
NormalForm dual_nf(const NormalForm& n);

/// Greatest lower bound: normalize(t & s).
NormalForm meet(const SessionType& t, const SessionType& s);
/// Least upper bound: normalize(t | s).
NormalForm join(const SessionType& t, const SessionType& s);

/// True iff `t` is equivalent to neither Bot nor Top.
bool viable(const SessionType& t);

std::string render_normal_form(const NormalForm& n);

}  // namespace sesstype

template <>
struct std::hash<sesstype::NormalForm> {
  std::size_t operator()(const sesstype::NormalForm& n) const noexcept { return n.hash(); }
};
