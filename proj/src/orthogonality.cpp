#include "sesstype/orthogonality.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sesstype/errors.hpp"
#include "sesstype/syntax.hpp"

namespace sesstype {

namespace {

void push_unique(std::vector<SystemState>& out, SystemState s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

bool has_success(const TransitionSet& t) {
  return std::any_of(t.labeled.begin(), t.labeled.end(),
                     [](const auto& l) { return l.first.is_success(); });
}

}  // namespace

std::vector<SystemState> system_step(LtsCache& cache, const SystemState& s) {
  const TransitionSet& l = cache.step(s.left);
  const TransitionSet& r = cache.step(s.right);
  std::vector<SystemState> out;
  for (const ProcessTerm& p : l.internal) push_unique(out, {p, s.right});
  for (const ProcessTerm& q : r.internal) push_unique(out, {s.left, q});
  for (const auto& [mu, p] : l.labeled) {
    if (mu.is_success()) continue;
    const Label co = mu.co();
    for (const auto& [nu, q] : r.labeled) {
      if (nu == co) push_unique(out, {p, q});
    }
  }
  return out;
}

std::vector<SystemState> system_step(const SystemState& s) {
  LtsCache cache;
  return system_step(cache, s);
}

bool orthogonal(LtsCache& cache, const ProcessTerm& p, const ProcessTerm& q,
                ExplorationOptions options) {
  std::unordered_set<SystemState> seen;
  std::vector<SystemState> stack{{p, q}};
  seen.insert(stack.back());
  while (!stack.empty()) {
    SystemState s = std::move(stack.back());
    stack.pop_back();
    std::vector<SystemState> next = system_step(cache, s);
    if (next.empty()) {
      if (!has_success(cache.step(s.left)) || !has_success(cache.step(s.right))) return false;
      continue;
    }
    for (SystemState& n : next) {
      if (!seen.insert(n).second) continue;
      if (seen.size() > options.max_states) {
        throw ExplorationLimit("orthogonality check visited more than " +
                               std::to_string(options.max_states) + " states");
      }
      stack.push_back(std::move(n));
    }
  }
  return true;
}

bool orthogonal(const ProcessTerm& p, const ProcessTerm& q, ExplorationOptions options) {
  LtsCache cache;
  return orthogonal(cache, p, q, options);
}

namespace {

struct Item {
  ProcessTerm term;
  std::string text;
};

// Calls `emit` on every chain of `op` with 2..`width` distinct operands from
// `pool` (sorted by text), at least one of them flagged in `fresh`.
class ChainBuilder {
 public:
  ChainBuilder(ProcessKind op, const std::vector<const Item*>& pool, std::vector<bool> fresh,
               std::size_t width, std::function<void(const ProcessTerm&)> emit)
      : op_(op), pool_(pool), fresh_(std::move(fresh)), width_(width), emit_(std::move(emit)) {}

  void run() {
    for (std::size_t k = 2; k <= width_ && k <= pool_.size(); ++k) choose(0, k, false);
  }

 private:
  void choose(std::size_t from, std::size_t remaining, bool has_fresh) {
    if (remaining == 0) {
      if (!has_fresh) return;
      ProcessTerm acc = pool_[chosen_.back()]->term;
      for (std::size_t i = chosen_.size() - 1; i-- > 0;) {
        const ProcessTerm& x = pool_[chosen_[i]]->term;
        acc = op_ == ProcessKind::ExternalChoice ? ProcessTerm::external_choice(x, acc)
                                                 : ProcessTerm::internal_choice(x, acc);
      }
      emit_(acc);
      return;
    }
    for (std::size_t i = from; i + remaining <= pool_.size(); ++i) {
      chosen_.push_back(i);
      choose(i + 1, remaining - 1, has_fresh || fresh_[i]);
      chosen_.pop_back();
    }
  }

  ProcessKind op_;
  const std::vector<const Item*>& pool_;
  std::vector<bool> fresh_;
  std::size_t width_;
  std::function<void(const ProcessTerm&)> emit_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void visit_processes(const std::set<ActionName>& alphabet, std::size_t depth,
                     const std::function<bool(const ProcessTerm&)>& visit,
                     const EnumerationLimits& limits) {
  if (alphabet.empty()) throw LimitError("enumeration alphabet is empty");
  if (alphabet.size() > limits.max_alphabet) {
    throw LimitError("alphabet of " + std::to_string(alphabet.size()) + " names exceeds " +
                     std::to_string(limits.max_alphabet));
  }
  if (depth > limits.max_depth) {
    throw LimitError("depth " + std::to_string(depth) + " exceeds " +
                     std::to_string(limits.max_depth));
  }
  if (limits.width < 2 || limits.width > limits.max_width) {
    throw LimitError("chain width " + std::to_string(limits.width) + " outside [2, " +
                     std::to_string(limits.max_width) + "]");
  }

  std::vector<Action> actions;
  for (const ActionName& n : alphabet) {
    actions.push_back({Polarity::Input, n});
    actions.push_back({Polarity::Output, n});
  }

  // Every process generated so far, with its height; kept for chain pools.
  std::vector<Item> all;
  std::vector<std::size_t> layer_start;
  auto record = [&](const ProcessTerm& p) {
    all.push_back({p, render_process(p)});
    return visit(p);
  };

  layer_start.push_back(0);
  if (!record(ProcessTerm::deadlock()) || !record(ProcessTerm::success())) return;

  for (std::size_t h = 1; h <= depth; ++h) {
    const std::size_t prev_begin = layer_start.back();
    const std::size_t prev_end = all.size();
    layer_start.push_back(prev_end);
    // `all` grows while this layer is emitted.
    std::vector<ProcessTerm> below;
    for (std::size_t i = prev_begin; i < prev_end; ++i) below.push_back(all[i].term);
    for (const Action& a : actions) {
      for (const ProcessTerm& p : below) {
        if (!record(ProcessTerm::prefix(a, p))) return;
      }
    }

    for (ProcessKind op : {ProcessKind::ExternalChoice, ProcessKind::InternalChoice}) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < prev_end; ++i) {
        if (all[i].term.kind() != op) idx.push_back(i);
      }
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t x, std::size_t y) { return all[x].text < all[y].text; });
      std::vector<const Item*> pool;
      std::vector<bool> fresh;
      for (std::size_t i : idx) {
        pool.push_back(&all[i]);
        fresh.push_back(i >= prev_begin);
      }
      // Chains are buffered: recording would reallocate `all` under `pool`.
      std::vector<ProcessTerm> chains;
      ChainBuilder(op, pool, std::move(fresh), limits.width,
                   [&](const ProcessTerm& p) { chains.push_back(p); })
          .run();
      for (const ProcessTerm& p : chains) {
        if (!record(p)) return;
      }
    }
  }
}

std::vector<ProcessTerm> enumerate_processes(const std::set<ActionName>& alphabet,
                                             std::size_t depth, const EnumerationLimits& limits) {
  std::vector<ProcessTerm> out;
  visit_processes(
      alphabet, depth,
      [&](const ProcessTerm& p) {
        out.push_back(p);
        return true;
      },
      limits);
  return out;
}

namespace {

void collect_names(const ProcessTerm& p, std::set<ActionName>& out) {
  switch (p.kind()) {
    case ProcessKind::Deadlock:
    case ProcessKind::Success: return;
    case ProcessKind::Prefix:
      out.insert(p.action().name);
      collect_names(p.continuation(), out);
      return;
    case ProcessKind::InternalChoice:
    case ProcessKind::ExternalChoice:
      collect_names(p.left(), out);
      collect_names(p.right(), out);
      return;
  }
}

ActionName fresh_name(const std::set<ActionName>& used) {
  for (char c = 'a'; c <= 'z'; ++c) {
    ActionName n(std::string(1, c));
    if (!used.contains(n)) return n;
  }
  for (std::size_t i = 0;; ++i) {
    ActionName n("x" + std::to_string(i));
    if (!used.contains(n)) return n;
  }
}

}  // namespace

std::set<ActionName> names_of(const ProcessTerm& p) {
  std::set<ActionName> out;
  collect_names(p, out);
  return out;
}

RefinementVerdict refines_bounded(const ProcessTerm& p, const ProcessTerm& q, std::size_t depth,
                                  ExplorationOptions options) {
  std::set<ActionName> alphabet = names_of(p);
  alphabet.merge(names_of(q));
  alphabet.insert(fresh_name(alphabet));

  LtsCache cache;
  RefinementVerdict verdict;
  visit_processes(alphabet, depth, [&](const ProcessTerm& r) {
    if (orthogonal(cache, p, r, options) && !orthogonal(cache, q, r, options)) {
      verdict.holds_up_to_bound = false;
      verdict.counterexample = r;
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace sesstype
