#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sesstype/process.hpp"

namespace sesstype {

/// One-step successors of a process.
struct TransitionSet {
  std::vector<ProcessTerm> internal;                   // P --> P'
  std::vector<std::pair<Label, ProcessTerm>> labeled;  // P --mu--> P'
};

using LabelSet = std::set<Label>;

/// Memoizing evaluator for the transition relations and the derived
/// observables. Not thread-safe; use one instance per thread.
///
/// Returned references stay valid until clear() or destruction (entries are
/// node-based and never overwritten).
class LtsCache {
 public:
  const TransitionSet& step(const ProcessTerm& p);

  /// Every term reachable by zero or more internal steps, `p` first.
  const std::vector<ProcessTerm>& weak_closure(const ProcessTerm& p);

  /// init(p): labels some member of the weak closure performs in one step.
  const LabelSet& weak_labels(const ProcessTerm& p);

  /// Labels guaranteed after any internal evolution: {mu | p must mu}.
  const LabelSet& must_labels(const ProcessTerm& p);

  /// Throws DomainError when `mu` is an input label.
  bool may(const ProcessTerm& p, const Label& mu);
  bool must(const ProcessTerm& p, const Label& mu);
  bool may_converge(const ProcessTerm& p);
  bool must_converge(const ProcessTerm& p);

  /// Internal choice of every residual after weakly performing `mu`, with
  /// duplicates removed and operands ordered by rendered form. Throws
  /// NoTransition when there is no such residual or `mu` is success.
  ProcessTerm continuation(const ProcessTerm& p, const Label& mu);

  std::size_t size() const noexcept { return entries_.size(); }
  void clear() { entries_.clear(); }

 private:
  struct Entry {
    std::optional<TransitionSet> step;
    std::optional<std::vector<ProcessTerm>> closure;
    std::optional<LabelSet> weak;
    std::optional<LabelSet> must;
    std::optional<bool> may_converge;
    std::vector<std::pair<Label, ProcessTerm>> continuations;
  };

  Entry& entry(const ProcessTerm& p) { return entries_[p]; }
  TransitionSet compute_step(const ProcessTerm& p);

  std::unordered_map<ProcessTerm, Entry> entries_;
};

TransitionSet step(const ProcessTerm& p);
std::vector<ProcessTerm> weak_closure(const ProcessTerm& p);
LabelSet weak_labels(const ProcessTerm& p);
bool may(const ProcessTerm& p, const Label& mu);
bool must(const ProcessTerm& p, const Label& mu);
bool may_converge(const ProcessTerm& p);
bool must_converge(const ProcessTerm& p);
ProcessTerm continuation(const ProcessTerm& p, const Label& mu);

}  // namespace sesstype
