#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sesstype/sesstype.hpp"

namespace sesstype::testing {

inline std::set<ActionName> names(const std::string& letters) {
  std::set<ActionName> out;
  for (char c : letters) out.insert(ActionName(std::string(1, c)));
  return out;
}

/// Session types of height at most `depth` over `alphabet`: leaves Bot, Top
/// and end; prefixes in both polarities; `&` and `|` over two distinct
/// operands, one of them exactly one level lower, neither rooted in the same
/// operator, ordered by rendered form.
inline std::vector<SessionType> enumerate_types(const std::set<ActionName>& alphabet,
                                                std::size_t depth) {
  std::vector<SessionType> all{SessionType::bottom(), SessionType::top(), SessionType::end()};
  std::vector<std::string> text;
  for (const auto& t : all) text.push_back(render_type(t));
  std::size_t prev_begin = 0;
  for (std::size_t h = 1; h <= depth; ++h) {
    const std::size_t prev_end = all.size();
    std::vector<SessionType> layer;
    for (const ActionName& n : alphabet) {
      for (Polarity pol : {Polarity::Input, Polarity::Output}) {
        for (std::size_t i = prev_begin; i < prev_end; ++i) {
          layer.push_back(SessionType::prefix({pol, n}, all[i]));
        }
      }
    }
    for (TypeKind op : {TypeKind::Intersection, TypeKind::Union}) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < prev_end; ++i) {
        if (all[i].kind() != op) pool.push_back(i);
      }
      std::sort(pool.begin(), pool.end(),
                [&](std::size_t x, std::size_t y) { return text[x] < text[y]; });
      for (std::size_t x = 0; x < pool.size(); ++x) {
        for (std::size_t y = x + 1; y < pool.size(); ++y) {
          if (pool[x] < prev_begin && pool[y] < prev_begin) continue;
          const SessionType& l = all[pool[x]];
          const SessionType& r = all[pool[y]];
          layer.push_back(op == TypeKind::Intersection ? SessionType::intersection(l, r)
                                                       : SessionType::union_of(l, r));
        }
      }
    }
    prev_begin = prev_end;
    for (auto& t : layer) {
      text.push_back(render_type(t));
      all.push_back(std::move(t));
    }
  }
  return all;
}

/// Random process with exactly `size` nodes.
inline ProcessTerm random_process(std::mt19937_64& rng, std::size_t size,
                                  const std::vector<std::string>& alphabet = {"a", "b", "c"}) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  if (size <= 1) return coin(rng) ? ProcessTerm::success() : ProcessTerm::deadlock();
  if (size == 2 || std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    Action a{coin(rng) ? Polarity::Input : Polarity::Output, ActionName(alphabet[pick(rng)])};
    return ProcessTerm::prefix(std::move(a), random_process(rng, size - 1, alphabet));
  }
  const std::size_t left = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
  ProcessTerm l = random_process(rng, left, alphabet);
  ProcessTerm r = random_process(rng, size - 1 - left, alphabet);
  return coin(rng) ? ProcessTerm::internal_choice(std::move(l), std::move(r))
                   : ProcessTerm::external_choice(std::move(l), std::move(r));
}

/// Random session type with exactly `size` nodes.
inline SessionType random_type(std::mt19937_64& rng, std::size_t size,
                               const std::vector<std::string>& alphabet = {"a", "b", "c"}) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  if (size <= 1) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: return SessionType::bottom();
      case 1: return SessionType::top();
      default: return SessionType::end();
    }
  }
  if (size == 2 || std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    Action a{coin(rng) ? Polarity::Input : Polarity::Output, ActionName(alphabet[pick(rng)])};
    return SessionType::prefix(std::move(a), random_type(rng, size - 1, alphabet));
  }
  const std::size_t left = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
  SessionType l = random_type(rng, left, alphabet);
  SessionType r = random_type(rng, size - 1 - left, alphabet);
  return coin(rng) ? SessionType::intersection(std::move(l), std::move(r))
                   : SessionType::union_of(std::move(l), std::move(r));
}

/// Random viable type built from prefixes, `&` and `|` with `end` leaves.
inline SessionType random_viable_type(std::mt19937_64& rng, std::size_t size,
                                      const std::vector<std::string>& alphabet = {"a", "b", "c"}) {
  for (;;) {
    SessionType t = random_type(rng, size, alphabet);
    if (viable(t)) return t;
  }
}

/// Random two-party global type between A and B with about `size` messages.
/// Choices put the same sender first in both branches.
inline GlobalType random_global(std::mt19937_64& rng, std::size_t size,
                                const std::vector<std::string>& alphabet = {"a", "b", "c"}) {
  const RoleName a("A");
  const RoleName b("B");
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  // A chain of messages whose first sender is `first`.
  auto chain = [&](auto& self, std::size_t n, const RoleName* first) -> GlobalType {
    if (n == 0) return GlobalType::end();
    const bool from_a = first ? *first == a : coin(rng) == 1;
    const RoleName& s = from_a ? a : b;
    const RoleName& r = from_a ? b : a;
    if (n >= 3 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      const std::size_t left = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
      return GlobalType::choice(self(self, left, &s), self(self, n - left, &s));
    }
    return GlobalType::message(s, r, ActionName(alphabet[pick(rng)]), self(self, n - 1, nullptr));
  };
  return chain(chain, size, nullptr);
}

}  // namespace sesstype::testing
