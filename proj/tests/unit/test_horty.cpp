#include <gtest/gtest.h>

#include <random>
#include <set>

#include "defeasor/arguments.hpp"
#include "defeasor/horty.hpp"
#include "support/oracles.hpp"

using namespace defeasor;

namespace {

const char* kLarry =
    "fact public_defender.\nfact brentwood_tenant.\n"
    "strict s_lawyer: public_defender -> lawyer.\n"
    "defeasible r_lawyer: lawyer => rich.\n"
    "defeasible r_defender: public_defender => ~rich.\n"
    "strict s_resident: brentwood_tenant -> brentwood_resident.\n"
    "defeasible r_resident: brentwood_resident => rich.\n"
    "defeasible r_tenant: brentwood_tenant => ~rich.\n"
    "prefer r_defender > r_lawyer.\nprefer r_tenant > r_resident.\n";

const char* kDixon =
    "fact quaker.\nfact republican.\nfact lives_in_chicago.\n"
    "defeasible r_quaker: quaker => pacifist.\n"
    "defeasible r_republican: republican => ~pacifist.\n"
    "defeasible r_pacifist: pacifist => ~has_gun.\n"
    "defeasible r_chicago: lives_in_chicago => has_gun.\n"
    "prefer r_pacifist > r_chicago.\n";

}  // namespace

TEST(Horty, LarryIsNotRich) {
  const auto r = horty_evaluate(parse_rulebase(kLarry));
  EXPECT_TRUE(r.conclusions.count(Literal{"rich", true}));
  EXPECT_FALSE(r.conclusions.count(Literal{"rich", false}));
  const auto* a = r.discard_of("r_lawyer[s_lawyer[public_defender]]");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->reason, DiscardReason::StrictlyDefeated);
  EXPECT_EQ(a->phase, HortyPhase::Strict);
  EXPECT_EQ(a->height, 2);
  EXPECT_EQ(a->culprits, (std::vector<ArgId>{"r_defender[public_defender]"}));
  EXPECT_TRUE(r.survived("r_defender[public_defender]"));
  EXPECT_TRUE(r.survived("r_tenant[brentwood_tenant]"));
  EXPECT_TRUE(horty_conclusion_holds(parse_rulebase(kLarry), Literal{"rich", true}));
}

TEST(Horty, DixonHasAGun) {
  const auto r = horty_evaluate(parse_rulebase(kDixon));
  EXPECT_TRUE(r.conclusions.count(Literal{"has_gun", false}));
  const auto* am = r.discard_of("r_quaker[quaker]");
  ASSERT_NE(am, nullptr);
  EXPECT_EQ(am->reason, DiscardReason::MutualTie);
  EXPECT_EQ(am->culprits, (std::vector<ArgId>{"r_republican[republican]"}));
  const auto* a = r.discard_of("r_pacifist[r_quaker[quaker]]");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->reason, DiscardReason::DeadSubargument);
  EXPECT_EQ(a->phase, HortyPhase::Construct);
  EXPECT_TRUE(r.survived("r_chicago[lives_in_chicago]"));
  EXPECT_EQ(horty_trace(r),
            "1 tie r_quaker[quaker] MutualTie [r_republican[republican]]\n"
            "1 tie r_republican[republican] MutualTie [r_quaker[quaker]]\n"
            "2 construct r_pacifist[r_quaker[quaker]] DeadSubargument [r_quaker[quaker]]\n");
}

TEST(Horty, TweetyNoReinstatement) {
  const auto r = horty_evaluate(parse_rulebase(
      "fact bird.\nfact penguin.\nfact magic_penguin.\n"
      "defeasible r_bird: bird => flies.\ndefeasible r_penguin: penguin => ~flies.\n"
      "defeasible r_magic: magic_penguin => flies.\n"
      "prefer r_magic > r_penguin.\nprefer r_penguin > r_bird.\n"));
  EXPECT_TRUE(r.conclusions.count(Literal{"flies", false}));
  ASSERT_NE(r.discard_of("r_bird[bird]"), nullptr);
  EXPECT_EQ(r.discard_of("r_bird[bird]")->reason, DiscardReason::StrictlyDefeated);
  EXPECT_TRUE(r.survived("r_magic[magic_penguin]"));
}

TEST(Horty, SelfDefeatCountsAsTie) {
  const auto r = horty_evaluate(parse_rulebase("fact a.\ndefeasible r: a => !r.\n"));
  const auto* d = r.discard_of("r[a]");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->reason, DiscardReason::MutualTie);
}

TEST(Horty, EmptyRuleBase) {
  const auto r = horty_evaluate(RuleBase{});
  EXPECT_TRUE(r.survivors.empty());
  EXPECT_TRUE(r.discarded.empty());
  EXPECT_TRUE(r.conclusions.empty());
}

TEST(Horty, PartitionAndConflictFreedomProperty) {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto rb = oracle::random_rulebase(rng);
    const auto args = construct_arguments(rb);
    const auto f = compute_defeats(args, rb);
    const auto r = horty_evaluate(rb);
    std::set<ArgId> seen;
    for (const auto& s : r.survivors) EXPECT_TRUE(seen.insert(s.id).second);
    for (const auto& d : r.discarded) EXPECT_TRUE(seen.insert(d.argument.id).second);
    EXPECT_EQ(seen.size(), args.size());
    for (const auto& x : r.survivors) {
      for (const auto& y : r.survivors) EXPECT_FALSE(f.defeats(f.index(x.id), f.index(y.id))) << x.id << " " << y.id;
      for (const auto& sub : x.subarguments) EXPECT_TRUE(r.survived(sub));
    }
    std::set<Conclusion> concl;
    for (const auto& s : r.survivors) concl.insert(s.conclusion);
    EXPECT_EQ(concl, r.conclusions);
  }
}
