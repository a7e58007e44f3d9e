#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "defeasor/arguments.hpp"
#include "defeasor/rulebase.hpp"

namespace defeasor {

// Interleaved, deeply skeptical evaluation.
//
// Arguments are taken in order of increasing height. At each height:
//
//   1. construct: every argument of this height whose direct subarguments
//      all survived joins the live set; the rest die with DeadSubargument.
//   2. strict phase: every live argument strictly defeated by an argument
//      live at the start of the phase is discarded at once.
//   3. tie phase: every remaining live argument in mutual defeat with
//      another remaining live argument (or with itself) is discarded.
//
// Discarding is permanent and discarded arguments exert no defeat later on,
// so nothing is ever reinstated. Defeat is the compiled defeat relation of
// compute_defeats. When a strict defeater would itself be tie-killed at the
// same height, its strict kill still lands first.

enum class DiscardReason { StrictlyDefeated, MutualTie, DeadSubargument };
enum class HortyPhase { Construct, Strict, Tie };

std::string_view to_string(DiscardReason r);
std::string_view to_string(HortyPhase p);

struct Discard {
  Argument argument;
  DiscardReason reason;
  int height;        // height being processed when the argument died
  HortyPhase phase;
  std::vector<ArgId> culprits;  // defeaters, tie partners, or dead subarguments
};

struct HortyResult {
  std::vector<Argument> survivors;  // sorted by id
  std::vector<Discard> discarded;   // in (height, phase, id) order
  std::set<Conclusion> conclusions;

  bool survived(std::string_view id) const;
  const Discard* discard_of(std::string_view id) const;
};

/// Throws CyclicRuleBaseError like construct_arguments.
HortyResult horty_evaluate(const RuleBase& rb, int height_cap = kDefaultHeightCap);

bool horty_conclusion_holds(const RuleBase& rb, const Literal& lit, int height_cap = kDefaultHeightCap);

/// One line per discard: `height phase argument reason [culprits]`.
std::string horty_trace(const HortyResult& r);

}  // namespace defeasor
