#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sesstype/sesstype.hpp"
#include "support/generators.hpp"

using namespace sesstype;

namespace {

ProcessTerm P(const char* s) { return parse_process(s); }
SessionType T(const char* s) { return parse_type(s); }
NormalForm N(const char* s) { return normalize(parse_type(s)); }

std::set<ActionName> type_names(const SessionType& t) {
  std::set<ActionName> out;
  if (t.kind() == TypeKind::Prefix) {
    out.insert(t.action().name);
    out.merge(type_names(t.continuation()));
  } else if (t.is_binary()) {
    out = type_names(t.left());
    out.merge(type_names(t.right()));
  }
  return out;
}

}  // namespace

TEST(DualTest, Examples) {
  EXPECT_EQ(dual(T("end")), T("end"));
  EXPECT_EQ(dual(T("!a.end & !b.end")), T("a.end | b.end"));
  EXPECT_EQ(dual(T("Bot | a.Top")), T("Top & !a.Bot"));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const SessionType t = sesstype::testing::random_type(rng, 1 + i % 20);
    ASSERT_EQ(dual(dual(t)), t);
  }
}

TEST(MemberTest, Goldens) {
  EXPECT_TRUE(member(P("!a (+) !b"), N("a.end | b.end")));
  EXPECT_FALSE(member(P("!a (+) !b"), N("a.end")));
  EXPECT_TRUE(member(P("a + b"), N("!a.end")));
  EXPECT_TRUE(member(P("1 + a"), N("end")));
  EXPECT_TRUE(member(P("1 + a + b"), N("end")));
  EXPECT_TRUE(member(P("1"), N("end")));
  EXPECT_FALSE(member(P("!a"), N("end")));
  for (const char* p : {"0", "1", "a (+) !b", "!a.!b"}) {
    EXPECT_TRUE(member(P(p), NormalForm::top())) << p;
    EXPECT_FALSE(member(P(p), NormalForm::bottom())) << p;
  }
}

TEST(MemberTypeTest, Examples) {
  EXPECT_TRUE(member_type(P("!a (+) !b"), T("a | b")));
  EXPECT_FALSE(member_type(P("1"), T("Bot")));
  // !a.(a + b) is a client of a.(!a & !b); its orthogonal a.!a is the one
  // inhabiting the dual.
  EXPECT_TRUE(member_type(P("!a.(a + b)"), T("a.(!a & !b)")));
  EXPECT_FALSE(member_type(P("!a.(a + b)"), dual(T("a.(!a & !b)"))));
  EXPECT_TRUE(member_type(P("a.!a"), dual(T("a.(!a & !b)"))));
  EXPECT_TRUE(member_type(P("a.!a"), T("!a.(a | b)")));
}

// The canonical end is an input union, so membership uses the may-reading;
// the must-reading of the output intersection {∅, end} must agree.
TEST(MemberTest, EndReadingsAgree) {
  auto ps = enumerate_processes(sesstype::testing::names("ab"), 3);
  std::mt19937_64 rng(42);
  std::shuffle(ps.begin(), ps.end(), rng);
  ps.resize(50);
  // Make sure both verdicts are represented.
  ps.push_back(P("1 + a"));
  ps.push_back(P("1 (+) !a"));
  LtsCache cache;
  for (const auto& p : ps) {
    const bool must_reading = cache.must_converge(p) && cache.must(p, Label::success());
    EXPECT_EQ(member(cache, p, NormalForm::end()), must_reading) << render_process(p);
  }
}

TEST(MemberPropertyTest, OutputFormWithEndRejectsMayOutputs) {
  LtsCache cache;
  const std::vector<NormalForm> forms{N("!a & end"), N("!a.b & !b & end"), N("end")};
  for (const auto& p : enumerate_processes(sesstype::testing::names("ab"), 3)) {
    bool may_output = false;
    for (const Label& mu : cache.weak_labels(p)) may_output = may_output || mu.is_output();
    if (!may_output) continue;
    for (const auto& n : forms) ASSERT_FALSE(member(cache, p, n)) << render_process(p);
  }
}

TEST(MemberPropertyTest, DualMembersAreOrthogonal) {
  const auto ps = enumerate_processes(sesstype::testing::names("ab"), 2);
  LtsCache cache;
  for (const auto& t : sesstype::testing::enumerate_types(sesstype::testing::names("ab"), 2)) {
    if (!viable(t)) continue;
    const NormalForm n = normalize(t), d = normalize(dual(t));
    for (const auto& p : ps) {
      if (!member(cache, p, n)) continue;
      for (const auto& q : ps) {
        if (member(cache, q, d)) ASSERT_TRUE(orthogonal(cache, p, q)) << render_type(t);
      }
    }
  }
}

// Every viable example type has a member and a dual member.
TEST(MemberPropertyTest, ViableTypesAreInhabited) {
  for (const char* s : {"end", "a.end | b.end", "!a.end & !b.end", "a.(!a & !b)", "!a.(!b & !c)",
                        "a.(b | c)", "(a|b|c) & (b|c|d)", "a.b.!a | a.c.!b",
                        "!a & !b & end", "(a.end | end) & !b.end"}) {
    const SessionType t = T(s);
    ASSERT_TRUE(viable(t)) << s;
    std::set<ActionName> alphabet = type_names(t);
    if (alphabet.empty()) alphabet.insert(ActionName("a"));
    EnumerationLimits limits;
    const std::size_t depth = std::max<std::size_t>(t.depth(), 1);
    limits.width = depth <= 2 ? 3 : 2;
    bool found_t = false, found_dual = false;
    const NormalForm n = normalize(t), d = normalize(dual(t));
    LtsCache cache;
    visit_processes(alphabet, depth + 1, [&](const ProcessTerm& p) {
      found_t = found_t || member(cache, p, n);
      found_dual = found_dual || member(cache, p, d);
      return !(found_t && found_dual);
    }, limits);
    EXPECT_TRUE(found_t) << s;
    EXPECT_TRUE(found_dual) << s;
  }
}
