#include "sesstype/lts.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sesstype/errors.hpp"
#include "sesstype/syntax.hpp"

namespace sesstype {

namespace {

template <typename T>
void push_unique(std::vector<T>& out, T value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(std::move(value));
}

}  // namespace

TransitionSet LtsCache::compute_step(const ProcessTerm& p) {
  TransitionSet out;
  switch (p.kind()) {
    case ProcessKind::Deadlock:
      break;
    case ProcessKind::Success:
      out.labeled.emplace_back(Label::success(), p);
      break;
    case ProcessKind::Prefix:
      out.labeled.emplace_back(Label(p.action()), p.continuation());
      break;
    case ProcessKind::InternalChoice:
      out.internal.push_back(p.left());
      push_unique(out.internal, p.right());
      break;
    case ProcessKind::ExternalChoice: {
      const TransitionSet& left = step(p.left());
      const TransitionSet& right = step(p.right());
      for (const auto& l : left.internal) {
        push_unique(out.internal, ProcessTerm::external_choice(l, p.right()));
      }
      for (const auto& r : right.internal) {
        push_unique(out.internal, ProcessTerm::external_choice(p.left(), r));
      }
      // An output in either branch preempts the other branch.
      for (const auto* side : {&left, &right}) {
        for (const auto& [mu, residual] : side->labeled) {
          if (mu.is_output()) push_unique(out.internal, ProcessTerm::prefix(mu.action(), residual));
        }
      }
      for (const auto* side : {&left, &right}) {
        for (const auto& t : side->labeled) push_unique(out.labeled, t);
      }
      break;
    }
  }
  return out;
}

const TransitionSet& LtsCache::step(const ProcessTerm& p) {
  if (auto& e = entry(p); e.step) return *e.step;
  auto computed = compute_step(p);
  auto& e = entry(p);
  e.step = std::move(computed);
  return *e.step;
}

const std::vector<ProcessTerm>& LtsCache::weak_closure(const ProcessTerm& p) {
  if (auto& e = entry(p); e.closure) return *e.closure;
  std::vector<ProcessTerm> order{p};
  std::unordered_set<ProcessTerm> seen{p};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto current = order[i];
    for (const auto& next : step(current).internal) {
      if (seen.insert(next).second) order.push_back(next);
    }
  }
  auto& e = entry(p);
  e.closure = std::move(order);
  return *e.closure;
}

const LabelSet& LtsCache::weak_labels(const ProcessTerm& p) {
  if (auto& e = entry(p); e.weak) return *e.weak;
  LabelSet labels;
  const TransitionSet& s = step(p);
  for (const auto& [mu, residual] : s.labeled) labels.insert(mu);
  for (const auto& next : s.internal) {
    const auto& more = weak_labels(next);
    labels.insert(more.begin(), more.end());
  }
  auto& e = entry(p);
  e.weak = std::move(labels);
  return *e.weak;
}

const LabelSet& LtsCache::must_labels(const ProcessTerm& p) {
  if (auto& e = entry(p); e.must) return *e.must;
  LabelSet labels = weak_labels(p);
  for (const auto& next : step(p).internal) {
    if (labels.empty()) break;
    const auto& guaranteed = must_labels(next);
    std::erase_if(labels, [&](const Label& mu) { return !guaranteed.contains(mu); });
  }
  auto& e = entry(p);
  e.must = std::move(labels);
  return *e.must;
}

bool LtsCache::may(const ProcessTerm& p, const Label& mu) {
  if (mu.is_input()) {
    throw DomainError("may-output is defined for output labels and success only, not '" +
                      to_string(mu) + "'");
  }
  return weak_labels(p).contains(mu);
}

bool LtsCache::must(const ProcessTerm& p, const Label& mu) { return must_labels(p).contains(mu); }

bool LtsCache::may_converge(const ProcessTerm& p) {
  if (auto& e = entry(p); e.may_converge) return *e.may_converge;
  const auto& labels = weak_labels(p);
  bool result = std::any_of(labels.begin(), labels.end(),
                            [](const Label& mu) { return !mu.is_input(); });
  if (result) {
    for (const auto& next : step(p).internal) {
      if (!may_converge(next)) {
        result = false;
        break;
      }
    }
  }
  entry(p).may_converge = result;
  return result;
}

bool LtsCache::must_converge(const ProcessTerm& p) { return !must_labels(p).empty(); }

ProcessTerm LtsCache::continuation(const ProcessTerm& p, const Label& mu) {
  for (const auto& [label, residual] : entry(p).continuations) {
    if (label == mu) return residual;
  }
  if (mu.is_success()) throw NoTransition("continuation is not defined for the success label");

  std::vector<std::pair<std::string, ProcessTerm>> residuals;
  for (const auto& q : weak_closure(p)) {
    for (const auto& [label, residual] : step(q).labeled) {
      if (label == mu) residuals.emplace_back(render_process(residual), residual);
    }
  }
  if (residuals.empty()) {
    throw NoTransition(render_process(p) + " cannot perform " + to_string(mu));
  }
  std::sort(residuals.begin(), residuals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  residuals.erase(std::unique(residuals.begin(), residuals.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  residuals.end());
  ProcessTerm folded = residuals.front().second;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    folded = ProcessTerm::internal_choice(std::move(folded), residuals[i].second);
  }
  auto& e = entry(p);
  e.continuations.emplace_back(mu, std::move(folded));
  return e.continuations.back().second;
}

TransitionSet step(const ProcessTerm& p) { return LtsCache().step(p); }
std::vector<ProcessTerm> weak_closure(const ProcessTerm& p) { return LtsCache().weak_closure(p); }
LabelSet weak_labels(const ProcessTerm& p) { return LtsCache().weak_labels(p); }
bool may(const ProcessTerm& p, const Label& mu) { return LtsCache().may(p, mu); }
bool must(const ProcessTerm& p, const Label& mu) { return LtsCache().must(p, mu); }
bool may_converge(const ProcessTerm& p) { return LtsCache().may_converge(p); }
bool must_converge(const ProcessTerm& p) { return LtsCache().must_converge(p); }
ProcessTerm continuation(const ProcessTerm& p, const Label& mu) {
  return LtsCache().continuation(p, mu);
}

}  // namespace sesstype
