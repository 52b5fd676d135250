#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sesstype/sesstype.hpp"
#include "support/generators.hpp"

using namespace sesstype;

namespace {

ProcessTerm P(const char* s) { return parse_process(s); }
Label in(const char* n) { return Label(Action::input(n)); }
Label out(const char* n) { return Label(Action::output(n)); }
const Label ok = Label::success();

std::set<std::string> rendered(const std::vector<ProcessTerm>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(render_process(p));
  return s;
}

}  // namespace

TEST(StepTest, Success) {
  const TransitionSet t = step(P("1"));
  EXPECT_TRUE(t.internal.empty());
  ASSERT_EQ(t.labeled.size(), 1u);
  EXPECT_EQ(t.labeled[0].first, ok);
  EXPECT_EQ(t.labeled[0].second, P("1"));
}

TEST(StepTest, Deadlock) {
  const TransitionSet t = step(P("0"));
  EXPECT_TRUE(t.internal.empty());
  EXPECT_TRUE(t.labeled.empty());
}

TEST(StepTest, OutputPreemptsExternalChoice) {
  const TransitionSet t = step(P("!a.b + c"));
  EXPECT_EQ(rendered(t.internal), (std::set<std::string>{"!a.b"}));
  const auto has = [&](const Label& l, const char* p) {
    return std::find(t.labeled.begin(), t.labeled.end(), std::pair{l, P(p)}) != t.labeled.end();
  };
  EXPECT_TRUE(has(out("a"), "b"));
  EXPECT_TRUE(has(in("c"), "1"));
  EXPECT_EQ(t.labeled.size(), 2u);
}

TEST(StepTest, InternalStepInsideExternalChoice) {
  const TransitionSet t = step(P("(a (+) b) + c"));
  EXPECT_EQ(rendered(t.internal), (std::set<std::string>{"a + c", "b + c"}));
  EXPECT_EQ(t.labeled.size(), 1u);
}

TEST(StepTest, SuccessIsOfferedThroughExternalChoice) {
  const TransitionSet t = step(P("1 + a"));
  EXPECT_EQ(t.labeled.size(), 2u);
  EXPECT_TRUE(weak_labels(P("1 + a")).contains(ok));
}

TEST(WeakClosureTest, Examples) {
  EXPECT_EQ(rendered(weak_closure(P("!a (+) !b"))),
            (std::set<std::string>{"!a (+) !b", "!a", "!b"}));
  EXPECT_EQ(rendered(weak_closure(P("a + b"))), (std::set<std::string>{"a + b"}));
  EXPECT_EQ(rendered(weak_closure(P("!a + b"))), (std::set<std::string>{"!a + b", "!a"}));
  EXPECT_EQ(weak_closure(P("a.(b (+) c)")).front(), P("a.(b (+) c)"));
}

TEST(WeakLabelsTest, Examples) {
  EXPECT_EQ(weak_labels(P("1")), LabelSet{ok});
  EXPECT_EQ(weak_labels(P("a.!a + a.!b")), LabelSet{in("a")});
  EXPECT_EQ(weak_labels(P("!a (+) !b")), (LabelSet{out("a"), out("b")}));
}

TEST(MayTest, Examples) {
  EXPECT_TRUE(may(P("!a.b"), out("a")));
  EXPECT_TRUE(may(P("a (+) !b"), out("b")));
  EXPECT_FALSE(may(P("a"), out("a")));
  EXPECT_TRUE(may(P("1 + a"), ok));
  EXPECT_THROW(may(P("a"), in("a")), DomainError);
}

TEST(MustTest, Examples) {
  EXPECT_TRUE(must(P("a + b"), in("a")));
  EXPECT_FALSE(must(P("a (+) !b"), in("a")));
  EXPECT_TRUE(must(P("1"), ok));
  EXPECT_TRUE(must(P("a.!a (+) a.!b"), in("a")));
  EXPECT_FALSE(must(P("1 + !a"), ok));
}

TEST(ConvergenceTest, Examples) {
  EXPECT_FALSE(may_converge(P("0")));
  EXPECT_FALSE(must_converge(P("a (+) !b")));
  EXPECT_FALSE(must_converge(P("!a (+) !b")));
  EXPECT_TRUE(may_converge(P("!a (+) !b")));
  EXPECT_FALSE(may_converge(P("a (+) !b")));
  EXPECT_TRUE(must_converge(P("a")));
  EXPECT_TRUE(may_converge(P("1 (+) !a")));
}

TEST(ContinuationTest, Examples) {
  EXPECT_EQ(continuation(P("!a.(b + c)"), out("a")), P("b + c"));
  EXPECT_EQ(continuation(P("a.!c + a.!b"), in("a")), P("!b (+) !c"));
  EXPECT_EQ(continuation(P("a.!b (+) a.!c"), in("a")), P("!b (+) !c"));
  EXPECT_EQ(continuation(P("a.!b + a.!b"), in("a")), P("!b"));
  EXPECT_EQ(continuation(P("a.b + a.c + a.d"), in("a")), P("b (+) c (+) d"));
}

TEST(ContinuationTest, Errors) {
  EXPECT_THROW(continuation(P("a"), in("b")), NoTransition);
  EXPECT_THROW(continuation(P("a"), out("a")), NoTransition);
  EXPECT_THROW(continuation(P("1"), ok), NoTransition);
}

TEST(LtsCacheTest, AgreesWithFreshEvaluation) {
  LtsCache cache;
  const auto ps = enumerate_processes(sesstype::testing::names("ab"), 2);
  for (const auto& p : ps) {
    EXPECT_EQ(cache.weak_labels(p), weak_labels(p));
    EXPECT_EQ(cache.must_converge(p), must_converge(p));
  }
  EXPECT_GT(cache.size(), 0u);
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}

// Each internal step strictly shrinks the term.
TEST(LtsPropertyTest, InternalStepsDecreaseSize) {
  std::mt19937_64 rng(21);
  LtsCache cache;
  for (int i = 0; i < 3000; ++i) {
    const ProcessTerm p = sesstype::testing::random_process(rng, 1 + i % 40);
    for (const ProcessTerm& q : cache.weak_closure(p)) {
      for (const ProcessTerm& r : cache.step(q).internal) {
        ASSERT_LT(r.size(), q.size()) << render_process(q) << " --> " << render_process(r);
      }
    }
  }
}

TEST(LtsPropertyTest, ObservableInvariants) {
  LtsCache cache;
  const auto ps = enumerate_processes(sesstype::testing::names("ab"), 3);
  for (const auto& p : ps) {
    const bool success = cache.must(p, ok);
    for (const Label& mu : cache.weak_labels(p)) {
      if (mu.is_output()) {
        ASSERT_FALSE(success) << render_process(p);
      }
    }
    for (const Label& mu : cache.must_labels(p)) {
      ASSERT_TRUE(cache.weak_labels(p).contains(mu)) << render_process(p);
      if (!mu.is_input()) ASSERT_TRUE(cache.may(p, mu));
    }
    ASSERT_EQ(cache.must_converge(p), !cache.must_labels(p).empty());
  }
}
