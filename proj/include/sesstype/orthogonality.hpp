#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "sesstype/lts.hpp"
#include "sesstype/process.hpp"

namespace sesstype {

/// The composition `left | right`.
struct SystemState {
  ProcessTerm left;
  ProcessTerm right;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

/// Successors by an internal step on either side or by synchronizing a
/// label with its co-label. Success does not synchronize.
std::vector<SystemState> system_step(const SystemState& s);
std::vector<SystemState> system_step(LtsCache& cache, const SystemState& s);

struct ExplorationOptions {
  std::size_t max_states = 1'000'000;
};

/// True iff every reachable stable state of `p | q` has both sides able to
/// perform ✓ in one step. Throws ExplorationLimit past `max_states`.
bool orthogonal(const ProcessTerm& p, const ProcessTerm& q, ExplorationOptions options = {});
bool orthogonal(LtsCache& cache, const ProcessTerm& p, const ProcessTerm& q,
                ExplorationOptions options = {});

struct EnumerationLimits {
  /// Widest choice chain built (number of operands).
  std::size_t width = 2;
  std::size_t max_depth = 4;
  std::size_t max_width = 3;
  std::size_t max_alphabet = 8;
};

/// Calls `visit` on every process of height at most `depth` over `alphabet`,
/// up to reordering and duplicate operands in choice chains. Chains are
/// flattened: a chain never has an operand rooted in its own operator, and
/// its 2..width distinct operands are sorted by rendered form and nested to
/// the right. A chain is one level above its highest operand.
///
/// Order is deterministic: by height, then prefixes, `+` chains and `(+)`
/// chains. Stops early when `visit` returns false. Throws LimitError when
/// the alphabet is empty or a parameter exceeds `limits`.
void visit_processes(const std::set<ActionName>& alphabet, std::size_t depth,
                     const std::function<bool(const ProcessTerm&)>& visit,
                     const EnumerationLimits& limits = {});

std::vector<ProcessTerm> enumerate_processes(const std::set<ActionName>& alphabet,
                                             std::size_t depth,
                                             const EnumerationLimits& limits = {});

struct RefinementVerdict {
  bool holds_up_to_bound = true;
  /// A test orthogonal to the left process but not the right one.
  std::optional<ProcessTerm> counterexample;
};

/// Names occurring in `p`.
std::set<ActionName> names_of(const ProcessTerm& p);

/// Looks for a test orthogonal to `p` and not to `q` among the processes of
/// height at most `depth` over the names of both plus one fresh name.
RefinementVerdict refines_bounded(const ProcessTerm& p, const ProcessTerm& q, std::size_t depth,
                                  ExplorationOptions options = {});

}  // namespace sesstype

template <>
struct std::hash<sesstype::SystemState> {
  std::size_t operator()(const sesstype::SystemState& s) const noexcept {
    return s.left.hash() * 0x100000001b3ULL ^ s.right.hash();
  }
};
