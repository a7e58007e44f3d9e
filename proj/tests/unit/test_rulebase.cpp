#include <gtest/gtest.h>

#include <random>

#include "defeasor/errors.hpp"
#include "defeasor/literal.hpp"
#include "defeasor/rulebase.hpp"
#include "support/oracles.hpp"

using namespace defeasor;

TEST(Literal, ParseAndComplement) {
  const auto l = parse_literal("~flies");
  EXPECT_TRUE(l.negated);
  EXPECT_EQ(l.atom, "flies");
  EXPECT_EQ(l.complement().complement(), l);
  EXPECT_EQ(l.complement().str(), "flies");
  EXPECT_THROW(parse_literal("~~p"), InputError);
  EXPECT_THROW(parse_literal("a b"), InputError);
  EXPECT_THROW(parse_literal("!r1"), InputError);
  EXPECT_EQ(to_string(parse_conclusion("!r1")), "!r1");
  EXPECT_TRUE(complementary(Literal{"p", false}, Literal{"p", true}));
  EXPECT_FALSE(complementary(UndercutTarget{"r"}, UndercutTarget{"r"}));
}

TEST(RuleBase, ParsesEveryStatement) {
  const auto rb = parse_rulebase(
      "fact bird.\n"
      "fact ~abnormal.\n"
      "strict s1: penguin -> bird.\n"
      "defeasible r1: bird, ~abnormal => flies.\n"
      "defeasible u1: penguin => !r1.\n"
      "defeasible r2: penguin => ~flies.\n"
      "prefer r2 > r1.\n"
      "query flies.\n");
  EXPECT_EQ(rb.facts.size(), 2u);
  ASSERT_EQ(rb.rules.size(), 4u);
  EXPECT_FALSE(rb.rules[0].defeasible());
  EXPECT_EQ(rb.rules[1].body.size(), 2u);
  EXPECT_EQ(to_string(rb.rules[2].head), "!r1");
  EXPECT_EQ(rb.preferences.front(), (std::pair<std::string, std::string>{"r2", "r1"}));
  EXPECT_EQ(rb.queries.front().str(), "flies");
  EXPECT_NE(rb.find_rule("u1"), nullptr);
  EXPECT_EQ(rb.find_rule("zz"), nullptr);
}

TEST(RuleBase, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_rulebase(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("fact a.\ndefeasible r1: => b.\n"), 2);
  EXPECT_EQ(line_of("fact a.\nfact b.\nwhatever c.\n"), 3);
  EXPECT_EQ(line_of("fact a.\ndefeasible r1: a => b.\ndefeasible r1: a => c.\n"), 3);
  EXPECT_EQ(line_of("fact a.\ndefeasible r1: a => !r9.\n"), 2);
  EXPECT_EQ(line_of("fact a.\nstrict s: a -> b.\ndefeasible r: a => !s.\n"), 3);
  EXPECT_EQ(line_of("fact a.\ndefeasible r: a => b\n"), 2);
  EXPECT_EQ(line_of("fact a.\nstrict s: a => b.\n"), 2);
}

TEST(RuleBase, PriorityClosureAndCycles) {
  const auto rb = parse_rulebase(
      "fact a.\n"
      "defeasible r1: a => b.\ndefeasible r2: a => c.\ndefeasible r3: a => d.\n"
      "prefer r3 > r2.\nprefer r2 > r1.\n");
  PriorityOrder order(rb);
  EXPECT_TRUE(order.prefers("r3", "r1"));
  EXPECT_FALSE(order.prefers("r1", "r3"));
  EXPECT_FALSE(order.prefers("r1", "r1"));
  EXPECT_THROW(parse_rulebase("fact a.\ndefeasible r1: a => b.\ndefeasible r2: a => c.\n"
                              "prefer r1 > r2.\nprefer r2 > r1.\n"),
               PriorityCycleError);
  EXPECT_THROW(parse_rulebase("fact a.\ndefeasible r1: a => b.\nprefer r1 > r1.\n"), PriorityCycleError);
}

TEST(RuleBase, SerializeRoundTripProperty) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto rb = oracle::random_rulebase(rng);
    const auto text = serialize_rulebase(rb);
    EXPECT_EQ(serialize_rulebase(parse_rulebase(text)), text);
  }
}
