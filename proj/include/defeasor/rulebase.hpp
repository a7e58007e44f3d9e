#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defeasor/literal.hpp"

namespace defeasor {

enum class RuleKind { Strict, Defeasible };

struct Rule {
  std::string name;
  std::vector<Literal> body;
  Conclusion head;  // an UndercutTarget only for defeasible undercutters
  RuleKind kind = RuleKind::Defeasible;

  bool defeasible() const { return kind == RuleKind::Defeasible; }
};

/// Facts, rules, declared priorities and queries.
///
/// RuleBase text format, one statement per line:
///
///   fact L.
///   strict NAME: L1, L2 -> L.
///   defeasible NAME: L1, L2 => L.
///   defeasible NAME: L1 => !RULE.
///   prefer N1 > N2.
///   query L.
struct RuleBase {
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  std::vector<std::pair<std::string, std::string>> preferences;  // (stronger, weaker)
  std::vector<Literal> queries;

  const Rule* find_rule(std::string_view name) const;

  /// Throws InputError for duplicate rule names, empty bodies, dangling
  /// undercut targets or priorities on unknown/strict rules, and
  /// PriorityCycleError when the priorities are not a strict partial order.
  void validate() const;
};

/// Transitive closure of the declared priorities.
class PriorityOrder {
 public:
  PriorityOrder() = default;
  explicit PriorityOrder(const RuleBase& rb);

  /// True when `stronger` is strictly preferred over `weaker`.
  bool prefers(const std::string& stronger, const std::string& weaker) const;

 private:
  std::map<std::string, std::set<std::string>> below_;
};

RuleBase parse_rulebase(std::string_view text);
std::string serialize_rulebase(const RuleBase& rb);

}  // namespace defeasor
