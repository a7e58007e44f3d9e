#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "defeasor/af_format.hpp"
#include "defeasor/arguments.hpp"
#include "defeasor/errors.hpp"
#include "support/oracles.hpp"

using namespace defeasor;

namespace {

const char* kTweety =
    "fact bird.\nfact penguin.\nfact magic_penguin.\n"
    "defeasible r_bird: bird => flies.\n"
    "defeasible r_penguin: penguin => ~flies.\n"
    "defeasible r_magic: magic_penguin => flies.\n"
    "prefer r_magic > r_penguin.\nprefer r_penguin > r_bird.\n";

const char* kWitnesses =
    "fact says_john_stabbed.\nfact says_bob_shot.\n"
    "defeasible r1_john: says_john_stabbed => stabbed.\n"
    "defeasible r1_bob: says_bob_shot => shot.\n"
    "defeasible r2_bob_vs_john: says_bob_shot, says_john_stabbed => !r1_john.\n"
    "defeasible r2_john_vs_bob: says_john_stabbed, says_bob_shot => !r1_bob.\n";

std::vector<ArgId> ids(const std::vector<Argument>& args) {
  std::vector<ArgId> out;
  for (const auto& a : args) out.push_back(a.id);
  return out;
}

const Argument& by_id(const std::vector<Argument>& args, const std::string& id) {
  auto it = std::find_if(args.begin(), args.end(), [&](const Argument& a) { return a.id == id; });
  if (it == args.end()) throw std::runtime_error("missing " + id);
  return *it;
}

}  // namespace

TEST(Arguments, TweetyClosure) {
  const auto args = construct_arguments(parse_rulebase(kTweety));
  EXPECT_EQ(ids(args), (std::vector<ArgId>{"bird", "magic_penguin", "penguin", "r_bird[bird]",
                                           "r_magic[magic_penguin]", "r_penguin[penguin]"}));
  const auto& a = by_id(args, "r_bird[bird]");
  EXPECT_EQ(a.height, 1);
  EXPECT_EQ(a.subarguments, (std::vector<ArgId>{"bird"}));
  EXPECT_EQ(a.last_defeasible, (std::set<std::string>{"r_bird"}));
  EXPECT_FALSE(a.strict_only);
  EXPECT_TRUE(by_id(args, "bird").is_fact());
}

TEST(Arguments, EmptyRuleBase) {
  EXPECT_TRUE(construct_arguments(RuleBase{}).empty());
  EXPECT_EQ(compile(RuleBase{}).size(), 0u);
}

TEST(Arguments, TweetyDefeatsAreStrict) {
  const auto f = compile(parse_rulebase(kTweety));
  EXPECT_EQ(f.defeat_pairs(), (std::vector<ArgPair>{{"r_magic[magic_penguin]", "r_penguin[penguin]"},
                                                    {"r_penguin[penguin]", "r_bird[bird]"}}));
  const auto attacks = compute_attacks(construct_arguments(parse_rulebase(kTweety)), parse_rulebase(kTweety));
  // Four rebuts between the flies and ~flies arguments, two of them weaker.
  EXPECT_EQ(attacks.size(), 4u);
  EXPECT_EQ(std::count_if(attacks.begin(), attacks.end(), [](const Attack& a) { return a.defeat; }), 2);
}

TEST(Arguments, WitnessUndercutsNoRebuts) {
  const auto rb = parse_rulebase(kWitnesses);
  const auto args = construct_arguments(rb);
  EXPECT_EQ(args.size(), 6u);
  const auto attacks = compute_attacks(args, rb);
  ASSERT_EQ(attacks.size(), 2u);
  for (const auto& a : attacks) {
    EXPECT_EQ(a.kind, AttackKind::Undercut);
    EXPECT_TRUE(a.defeat);
  }
  EXPECT_EQ(attacks[0].attacker, "r2_bob_vs_john[says_bob_shot;says_john_stabbed]");
  EXPECT_EQ(attacks[0].target, "r1_john[says_john_stabbed]");
}

TEST(Arguments, MultipleDerivationsAreDistinct) {
  const auto rb = parse_rulebase(
      "fact a.\nfact b.\n"
      "defeasible r1: a => c.\ndefeasible r2: b => c.\ndefeasible r3: c => d.\n");
  const auto args = construct_arguments(rb);
  EXPECT_EQ(args.size(), 6u);
  EXPECT_EQ(by_id(args, "r3[r1[a]]").height, 2);
  EXPECT_EQ(by_id(args, "r3[r2[b]]").last_defeasible, (std::set<std::string>{"r3"}));
}

TEST(Arguments, LastDefeasibleLooksThroughStrictTop) {
  const auto rb = parse_rulebase(
      "fact a.\nfact b.\n"
      "defeasible r1: a => c.\ndefeasible r2: b => d.\nstrict s: c, d -> e.\n");
  const auto args = construct_arguments(rb);
  const auto& e = by_id(args, "s[r1[a];r2[b]]");
  EXPECT_EQ(e.last_defeasible, (std::set<std::string>{"r1", "r2"}));
  EXPECT_FALSE(e.top_defeasible);
}

TEST(Arguments, WeakestLinkComparison) {
  // The attacker's weakest last rule r1 sits below both of the target's.
  const auto rb = parse_rulebase(
      "fact a.\nfact b.\n"
      "defeasible r1: a => x.\ndefeasible r2: a => y.\ndefeasible r3: b => z.\n"
      "strict s1: x -> ~w.\ndefeasible t: y, z => w.\n"
      "prefer r3 > r1.\nprefer r2 > r1.\n");
  PriorityOrder order(rb);
  Argument attacker, target;
  attacker.last_defeasible = {"r1"};
  target.last_defeasible = {"r2", "r3"};
  EXPECT_TRUE(strictly_weaker(attacker, target, order));
  EXPECT_FALSE(strictly_weaker(target, attacker, order));
  Argument strict_only;
  EXPECT_FALSE(strictly_weaker(strict_only, target, order));
  target.last_defeasible = {"r2", "t"};
  EXPECT_FALSE(strictly_weaker(attacker, target, order));  // r1 is not below t
}

TEST(Arguments, StrictArgumentsAreNeverRebutted) {
  const auto f = compile(parse_rulebase(
      "fact a.\nfact ~b.\nstrict s: a -> b.\ndefeasible r: a => ~b.\n"));
  // s[a] (strict) and the fact ~b conflict, but neither has a defeasible top.
  EXPECT_TRUE(f.attackers(f.index("s[a]")).empty());
  EXPECT_TRUE(f.attackers(f.index("~b")).empty());
  EXPECT_TRUE(f.defeats(f.index("s[a]"), f.index("r[a]")));
}

TEST(Arguments, HeightCapDetectsCycles) {
  const auto rb = parse_rulebase("fact a.\ndefeasible r1: a => b.\ndefeasible r2: b => a.\n");
  EXPECT_THROW(construct_arguments(rb), CyclicRuleBaseError);
  EXPECT_THROW(construct_arguments(rb, 4), CyclicRuleBaseError);
  const auto deep = parse_rulebase("fact a.\ndefeasible r1: a => b.\ndefeasible r2: b => c.\n");
  EXPECT_THROW(construct_arguments(deep, 1), CyclicRuleBaseError);
  EXPECT_EQ(construct_arguments(deep, 2).size(), 3u);
}

TEST(Arguments, PropertiesOnRandomRuleBases) {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto rb = oracle::random_rulebase(rng);
    const auto args = construct_arguments(rb);
    std::set<ArgId> all;
    for (const auto& a : args) all.insert(a.id);
    for (const auto& a : args) {
      // Subargument closure and body alignment.
      if (!a.is_fact()) {
        const auto* rule = rb.find_rule(*a.top_rule);
        ASSERT_NE(rule, nullptr);
        ASSERT_EQ(rule->body.size(), a.subarguments.size());
        for (std::size_t k = 0; k < a.subarguments.size(); ++k) {
          ASSERT_TRUE(all.count(a.subarguments[k]));
          EXPECT_EQ(by_id(args, a.subarguments[k]).conclusion, Conclusion{rule->body[k]});
        }
      }
    }
    const auto f = compute_defeats(args, rb);
    // Strict-rule immunity: no rebut edge reaches a strict-only argument.
    for (const auto& at : compute_attacks(args, rb)) {
      if (at.kind == AttackKind::Rebut) EXPECT_FALSE(by_id(args, at.target).strict_only);
    }
    // Undercut priority-blindness.
    auto no_prio = rb;
    no_prio.preferences.clear();
    const auto g = compute_defeats(args, no_prio);
    for (const auto& at : compute_attacks(args, rb)) {
      if (at.kind == AttackKind::Undercut) {
        EXPECT_TRUE(g.defeats(g.index(at.attacker), g.index(at.target)));
        EXPECT_TRUE(f.defeats(f.index(at.attacker), f.index(at.target)));
      }
    }
    // Declaration order does not matter.
    auto shuffled = rb;
    std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
    std::shuffle(shuffled.facts.begin(), shuffled.facts.end(), rng);
    std::shuffle(shuffled.preferences.begin(), shuffled.preferences.end(), rng);
    EXPECT_EQ(compile(shuffled), f);
    EXPECT_EQ(serialize_framework(compile(shuffled)), serialize_framework(f));
  }
}
