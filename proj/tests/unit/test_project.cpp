#include <gtest/gtest.h>

#include <random>

#include "sesstype/sesstype.hpp"
#include "support/generators.hpp"

using namespace sesstype;

namespace {

SessionType T(const char* s) { return parse_type(s); }
GlobalType G(const char* s) { return parse_global(s); }
const RoleName A("A");
const RoleName B("B");

bool has_choice(const GlobalType& g) {
  switch (g.kind()) {
    case GlobalType::Kind::End: return false;
    case GlobalType::Kind::Message: return has_choice(g.continuation());
    case GlobalType::Kind::Choice: return true;
  }
  return false;
}

}  // namespace

TEST(ProjectTest, Golden) {
  const GlobalType g = G("A->B:a; A->B:b; end [] A->B:a; A->B:c; end");
  EXPECT_TRUE(equivalent(project(g, A), T("!a.(!b & !c)")));
  EXPECT_TRUE(equivalent(project(g, B), T("a.(b | c)")));
  EXPECT_EQ(render_type(project(g, A)), "!a.(!b.end & !c.end)");
}

TEST(ProjectTest, EndAndChains) {
  EXPECT_EQ(project(GlobalType::end(), A), T("end"));
  EXPECT_EQ(project(G("A->B:a; B->A:b; end"), A), T("!a.b.end"));
  EXPECT_EQ(project(G("A->B:a; B->A:b; end"), B), T("a.!b.end"));
}

TEST(ProjectTest, Errors) {
  EXPECT_THROW(project(G("A->B:a; end [] B->A:b; end"), A), ProjectionError);
  EXPECT_THROW(project(G("A->B:a; end [] end"), A), ProjectionError);
  EXPECT_THROW(project(G("A->B:a; end"), RoleName("C")), ProjectionError);
  // A's branches disagree on whether to send or to receive next.
  EXPECT_THROW(project(G("A->B:a; B->A:b; end [] A->B:a; A->B:c; end"), A), ProjectionError);
}

TEST(ProjectPropertyTest, ProjectionsAreDual) {
  std::mt19937_64 rng(61);
  int chains = 0, choices = 0;
  for (int i = 0; i < 3000; ++i) {
    const GlobalType g = sesstype::testing::random_global(rng, 1 + i % 7);
    SessionType a, b;
    try {
      a = project(g, A);
      b = project(g, B);
    } catch (const ProjectionError&) {
      continue;
    }
    if (has_choice(g)) {
      ++choices;
      ASSERT_TRUE(subtype(a, dual(b))) << render_global(g);
    } else {
      ++chains;
      ASSERT_TRUE(equivalent(a, dual(b))) << render_global(g);
    }
  }
  EXPECT_GT(chains, 100);
  EXPECT_GT(choices, 100);
}
