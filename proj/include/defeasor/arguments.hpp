#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "defeasor/framework.hpp"
#include "defeasor/rulebase.hpp"

namespace defeasor {

inline constexpr int kDefaultHeightCap = 32;

/// A derivation tree over the facts of a rule base.
///
/// The id is the canonical text of the tree: a fact argument is the literal
/// itself (`bird`, `~p`), a rule application is `rule[sub1;sub2]` with the
/// subarguments in body order. Two arguments are the same iff their ids are.
struct Argument {
  ArgId id;
  Conclusion conclusion;
  std::optional<std::string> top_rule;  // empty for fact arguments
  bool top_defeasible = false;
  std::vector<ArgId> subarguments;      // direct, in body order
  int height = 0;                       // rule applications on the longest branch
  std::set<std::string> last_defeasible;
  bool strict_only = true;              // no defeasible rule anywhere in the tree

  bool is_fact() const { return !top_rule.has_value(); }
};

/// Closes the facts under the rules. Result is sorted by id. Throws
/// CyclicRuleBaseError when an argument higher than `height_cap` appears.
std::vector<Argument> construct_arguments(const RuleBase& rb, int height_cap = kDefaultHeightCap);

enum class AttackKind { Rebut, Undercut };

/// A direct attack on an argument (before propagation to superarguments).
struct Attack {
  ArgId attacker;
  ArgId target;
  AttackKind kind;
  bool defeat;  // false for a rebut by a strictly weaker attacker

  bool operator==(const Attack&) const = default;
};

/// True when `attacker` is strictly weaker than `target`: some last
/// defeasible rule of the attacker is below every last defeasible rule of
/// the target. Arguments with no last defeasible rule are never weaker.
bool strictly_weaker(const Argument& attacker, const Argument& target, const PriorityOrder& order);

/// All direct attacks, sorted by (attacker, target).
std::vector<Attack> compute_attacks(const std::vector<Argument>& args, const RuleBase& rb);

/// Compiles the arguments into a framework carrying subargument links and
/// conclusion labels. Undercuts always defeat; rebuts defeat unless the
/// attacker is strictly weaker.
Framework compute_defeats(const std::vector<Argument>& args, const RuleBase& rb);

/// construct_arguments followed by compute_defeats.
Framework compile(const RuleBase& rb, int height_cap = kDefaultHeightCap);

}  // namespace defeasor
