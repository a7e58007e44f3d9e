#include "defeasor/rulebase.hpp"

#include <algorithm>
#include <sstream>

#include "defeasor/errors.hpp"
#include "text_util.hpp"

namespace defeasor {

using detail::split;
using detail::starts_with_word;
using detail::trim;

const Rule* RuleBase::find_rule(std::string_view name) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.name == name; });
  return it == rules.end() ? nullptr : &*it;
}

namespace {

// Line numbers of rule and prefer statements, when the rule base came from text.
struct SourceLines {
  std::vector<int> rules;
  std::vector<int> preferences;
};

[[noreturn]] void fail(const SourceLines* lines, const std::vector<int> SourceLines::*which, std::size_t i,
                       const std::string& message) {
  if (lines && i < (lines->*which).size()) throw ParseError((lines->*which)[i], message);
  throw InputError(message);
}

void validate_impl(const RuleBase& rb, const SourceLines* lines) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    const auto& r = rb.rules[i];
    if (!is_identifier(r.name)) fail(lines, &SourceLines::rules, i, "invalid rule name '" + r.name + "'");
    if (!names.insert(r.name).second) fail(lines, &SourceLines::rules, i, "duplicate rule name '" + r.name + "'");
    if (r.body.empty()) fail(lines, &SourceLines::rules, i, "rule '" + r.name + "' has an empty body");
    if (!r.defeasible() && std::holds_alternative<UndercutTarget>(r.head)) {
      fail(lines, &SourceLines::rules, i, "strict rule '" + r.name + "' cannot have an undercut head");
    }
  }
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    if (const auto* u = std::get_if<UndercutTarget>(&rb.rules[i].head)) {
      const Rule* target = rb.find_rule(u->rule);
      if (!target || !target->defeasible()) {
        fail(lines, &SourceLines::rules, i,
             "rule '" + rb.rules[i].name + "' undercuts '" + u->rule + "', which is not a defeasible rule");
      }
    }
  }
  for (std::size_t i = 0; i < rb.preferences.size(); ++i) {
    for (const auto& n : {rb.preferences[i].first, rb.preferences[i].second}) {
      const Rule* r = rb.find_rule(n);
      if (!r || !r->defeasible()) {
        fail(lines, &SourceLines::preferences, i, "priority names '" + n + "', which is not a defeasible rule");
      }
    }
  }
  PriorityOrder check(rb);
  (void)check;
}

std::vector<Literal> parse_body(int line, std::string_view text) {
  std::vector<Literal> body;
  for (auto part : split(text, ',')) {
    try {
      body.push_back(parse_literal(part));
    } catch (const InputError& e) {
      throw ParseError(line, e.what());
    }
  }
  return body;
}

Rule parse_rule(int line, std::string_view stmt, RuleKind kind) {
  std::string_view arrow = kind == RuleKind::Strict ? "->" : "=>";
  stmt = trim(stmt.substr(kind == RuleKind::Strict ? 6 : 10));
  auto colon = stmt.find(':');
  if (colon == std::string_view::npos) throw ParseError(line, "expected 'NAME:' after rule keyword");
  auto pos = stmt.find(arrow, colon);
  if (pos == std::string_view::npos) throw ParseError(line, "expected '" + std::string(arrow) + "' in rule");
  Rule r;
  r.kind = kind;
  r.name = std::string(trim(stmt.substr(0, colon)));
  if (!is_identifier(r.name)) throw ParseError(line, "invalid rule name '" + r.name + "'");
  auto body_text = trim(stmt.substr(colon + 1, pos - colon - 1));
  if (body_text.empty()) throw ParseError(line, "rule '" + r.name + "' has an empty body");
  r.body = parse_body(line, body_text);
  try {
    r.head = parse_conclusion(trim(stmt.substr(pos + arrow.size())));
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
  return r;
}

Literal parse_single_literal(int line, std::string_view text) {
  try {
    return parse_literal(trim(text));
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

void RuleBase::validate() const { validate_impl(*this, nullptr); }

PriorityOrder::PriorityOrder(const RuleBase& rb) {
  for (const auto& [hi, lo] : rb.preferences) below_[hi].insert(lo);
  // Warshall-style closure over the handful of named rules.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [hi, lows] : below_) {
      std::set<std::string> add;
      for (const auto& lo : lows) {
        auto it = below_.find(lo);
        if (it == below_.end()) continue;
        for (const auto& x : it->second) {
          if (!lows.count(x)) add.insert(x);
        }
      }
      if (!add.empty()) {
        lows.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
  for (const auto& [hi, lows] : below_) {
    if (lows.count(hi)) throw PriorityCycleError("priority cycle through rule '" + hi + "'");
  }
}

bool PriorityOrder::prefers(const std::string& stronger, const std::string& weaker) const {
  auto it = below_.find(stronger);
  return it != below_.end() && it->second.count(weaker) > 0;
}

RuleBase parse_rulebase(std::string_view text) {
  RuleBase rb;
  SourceLines lines;
  detail::for_each_statement(text, [&](int line, std::string_view stmt) {
    if (starts_with_word(stmt, "fact")) {
      rb.facts.push_back(parse_single_literal(line, stmt.substr(4)));
    } else if (starts_with_word(stmt, "query")) {
      rb.queries.push_back(parse_single_literal(line, stmt.substr(5)));
    } else if (starts_with_word(stmt, "strict")) {
      rb.rules.push_back(parse_rule(line, stmt, RuleKind::Strict));
      lines.rules.push_back(line);
    } else if (starts_with_word(stmt, "defeasible")) {
      rb.rules.push_back(parse_rule(line, stmt, RuleKind::Defeasible));
      lines.rules.push_back(line);
    } else if (starts_with_word(stmt, "prefer")) {
      auto parts = split(stmt.substr(6), '>');
      if (parts.size() != 2 || !is_identifier(parts[0]) || !is_identifier(parts[1])) {
        throw ParseError(line, "expected 'prefer N1 > N2'");
      }
      rb.preferences.emplace_back(std::string(parts[0]), std::string(parts[1]));
      lines.preferences.push_back(line);
    } else {
      throw ParseError(line, "unknown statement '" + std::string(stmt) + "'");
    }
  });
  validate_impl(rb, &lines);
  return rb;
}

std::string serialize_rulebase(const RuleBase& rb) {
  std::ostringstream out;
  for (const auto& f : rb.facts) out << "fact " << f.str() << ".\n";
  for (const auto& r : rb.rules) {
    out << (r.defeasible() ? "defeasible " : "strict ") << r.name << ": ";
    for (std::size_t i = 0; i < r.body.size(); ++i) out << (i ? ", " : "") << r.body[i].str();
    out << (r.defeasible() ? " => " : " -> ") << to_string(r.head) << ".\n";
  }
  for (const auto& [hi, lo] : rb.preferences) out << "prefer " << hi << " > " << lo << ".\n";
  for (const auto& q : rb.queries) out << "query " << q.str() << ".\n";
  return out.str();
}

}  // namespace defeasor
