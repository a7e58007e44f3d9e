#pragma once

#include <string>
#include <vector>

#include "defeasor/arguments.hpp"
#include "defeasor/conclusions.hpp"
#include "defeasor/rulebase.hpp"

namespace defeasor {

/// One literal's standing under each evaluation route.
struct DiffRow {
  Literal literal;
  Status grounded = Status::Overruled;
  Status preferred = Status::Overruled;
  Status stable = Status::Overruled;
  bool horty = false;
  bool floating = false;  // floating under preferred semantics
  /// Every route justifies it, or none does.
  bool agree = false;

  bool operator==(const DiffRow&) const = default;
};

struct DiffReport {
  std::vector<DiffRow> rows;  // sorted by literal
  std::vector<Conclusion> floating;
  std::vector<ZombiePair> zombies;  // under preferred semantics
  bool no_stable_extension = false;
};

/// Rows cover every literal concluded by some argument plus the queries.
DiffReport diff_semantics(const RuleBase& rb, int height_cap = kDefaultHeightCap);

std::string render_text(const DiffReport& report);
std::string render_json(const DiffReport& report);

}  // namespace defeasor
