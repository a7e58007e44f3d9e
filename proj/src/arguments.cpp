#include "defeasor/arguments.hpp"

#include <algorithm>
#include <map>

#include "defeasor/errors.hpp"

namespace defeasor {

namespace {

Argument make_rule_argument(const Rule& rule, const std::vector<const Argument*>& subs) {
  Argument a;
  a.id = rule.name + "[";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i) a.id += ';';
    a.id += subs[i]->id;
  }
  a.id += "]";
  a.conclusion = rule.head;
  a.top_rule = rule.name;
  a.top_defeasible = rule.defeasible();
  a.strict_only = !rule.defeasible();
  for (const auto* s : subs) {
    a.subarguments.push_back(s->id);
    a.height = std::max(a.height, s->height + 1);
    a.strict_only = a.strict_only && s->strict_only;
  }
  if (rule.defeasible()) {
    a.last_defeasible = {rule.name};
  } else {
    for (const auto* s : subs) a.last_defeasible.insert(s->last_defeasible.begin(), s->last_defeasible.end());
  }
  return a;
}

}  // namespace

std::vector<Argument> construct_arguments(const RuleBase& rb, int height_cap) {
  std::vector<Argument> all;
  std::map<Literal, std::vector<std::size_t>> by_literal;
  auto add = [&](Argument a) {
    if (const auto* lit = std::get_if<Literal>(&a.conclusion)) by_literal[*lit].push_back(all.size());
    all.push_back(std::move(a));
  };

  std::set<Literal> facts(rb.facts.begin(), rb.facts.end());
  for (const auto& f : facts) {
    Argument a;
    a.id = f.str();
    a.conclusion = f;
    add(std::move(a));
  }

  // Level h combines subarguments of height < h with at least one of height h-1,
  // so every derivation tree is produced exactly once.
  for (int h = 1; !all.empty(); ++h) {
    std::vector<Argument> level;
    for (const auto& rule : rb.rules) {
      std::vector<std::vector<const Argument*>> options;
      bool feasible = true;
      for (const auto& lit : rule.body) {
        std::vector<const Argument*> opts;
        auto it = by_literal.find(lit);
        if (it != by_literal.end()) {
          for (auto idx : it->second) {
            if (all[idx].height < h) opts.push_back(&all[idx]);
          }
        }
        if (opts.empty()) {
          feasible = false;
          break;
        }
        options.push_back(std::move(opts));
      }
      if (!feasible) continue;

      std::vector<std::size_t> pick(options.size(), 0);
      std::vector<const Argument*> subs(options.size());
      while (true) {
        int top = -1;
        for (std::size_t i = 0; i < options.size(); ++i) {
          subs[i] = options[i][pick[i]];
          top = std::max(top, subs[i]->height);
        }
        if (top == h - 1) level.push_back(make_rule_argument(rule, subs));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
    if (level.empty()) break;
    if (h > height_cap) {
      throw CyclicRuleBaseError("argument height exceeds cap " + std::to_string(height_cap) +
                                " (cyclic rule base?), e.g. " + level.front().id);
    }
    for (auto& a : level) add(std::move(a));
  }

  std::sort(all.begin(), all.end(), [](const Argument& a, const Argument& b) { return a.id < b.id; });
  return all;
}

bool strictly_weaker(const Argument& attacker, const Argument& target, const PriorityOrder& order) {
  if (attacker.last_defeasible.empty() || target.last_defeasible.empty()) return false;
  return std::any_of(attacker.last_defeasible.begin(), attacker.last_defeasible.end(), [&](const std::string& x) {
    return std::all_of(target.last_defeasible.begin(), target.last_defeasible.end(),
                       [&](const std::string& y) { return order.prefers(y, x); });
  });
}

std::vector<Attack> compute_attacks(const std::vector<Argument>& args, const RuleBase& rb) {
  PriorityOrder order(rb);
  std::vector<Attack> out;
  for (const auto& x : args) {
    for (const auto& y : args) {
      if (!y.top_defeasible) continue;
      if (const auto* u = std::get_if<UndercutTarget>(&x.conclusion)) {
        if (u->rule == *y.top_rule) out.push_back({x.id, y.id, AttackKind::Undercut, true});
      } else if (complementary(x.conclusion, y.conclusion)) {
        out.push_back({x.id, y.id, AttackKind::Rebut, !strictly_weaker(x, y, order)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Attack& a, const Attack& b) {
    return std::tie(a.attacker, a.target) < std::tie(b.attacker, b.target);
  });
  return out;
}

Framework compute_defeats(const std::vector<Argument>& args, const RuleBase& rb) {
  FrameworkSpec spec;
  for (const auto& a : args) {
    spec.args.push_back(a.id);
    spec.conclusions.emplace_back(a.id, a.conclusion);
    for (const auto& s : a.subarguments) spec.subargs.emplace_back(s, a.id);
  }
  for (const auto& at : compute_attacks(args, rb)) {
    if (at.defeat) spec.attacks.emplace_back(at.attacker, at.target);
  }
  return Framework(spec);
}

Framework compile(const RuleBase& rb, int height_cap) {
  return compute_defeats(construct_arguments(rb, height_cap), rb);
}

}  // namespace defeasor
