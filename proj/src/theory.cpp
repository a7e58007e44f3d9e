#include "defeasor/theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "defeasor/errors.hpp"
#include "text_util.hpp"

namespace defeasor {

using detail::split;
using detail::starts_with_word;
using detail::trim;

std::vector<Literal> Clause::disjuncts() const {
  std::vector<Literal> out;
  for (const auto& b : body) out.push_back(b.complement());
  out.insert(out.end(), literals.begin(), literals.end());
  return out;
}

namespace {

void check_literal(const std::set<std::string>& atoms, const Literal& l) {
  if (!atoms.count(l.atom)) throw InputError("undeclared atom '" + l.atom + "'");
}

Literal literal_at(int line, std::string_view text) {
  try {
    return parse_literal(trim(text));
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<Literal> literals_at(int line, std::string_view text, char sep) {
  std::vector<Literal> out;
  for (auto part : split(text, sep)) out.push_back(literal_at(line, part));
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

void validate_with(const Theory& t, const std::vector<int>* clause_lines, const std::vector<int>* query_lines) {
  std::set<std::string> atoms;
  for (const auto& a : t.atoms) {
    if (!is_identifier(a)) throw InputError("invalid atom name '" + a + "'");
    if (!atoms.insert(a).second) throw InputError("duplicate atom '" + a + "'");
  }
  auto at_line = [](const std::vector<int>* lines, std::size_t i, auto&& fn) {
    try {
      fn();
    } catch (const InputError& e) {
      if (lines && i < lines->size()) throw ParseError((*lines)[i], e.what());
      throw;
    }
  };
  for (std::size_t i = 0; i < t.clauses.size(); ++i) {
    at_line(clause_lines, i, [&] {
      if (t.clauses[i].disjuncts().empty()) throw InputError("empty clause");
      for (const auto& l : t.clauses[i].disjuncts()) check_literal(atoms, l);
    });
  }
  for (std::size_t i = 0; i < t.queries.size(); ++i) {
    at_line(query_lines, i, [&] { check_literal(atoms, t.queries[i]); });
  }
  for (const auto& m : t.minimized) {
    if (!atoms.count(m)) throw InputError("minimized atom '" + m + "' is not declared");
  }
}

}  // namespace

void Theory::validate() const { validate_with(*this, nullptr, nullptr); }

Theory parse_theory(std::string_view text) {
  Theory t;
  std::vector<int> clause_lines, query_lines;
  std::vector<std::pair<int, std::string>> minimize_lines;
  detail::for_each_statement(text, [&](int line, std::string_view stmt) {
    if (starts_with_word(stmt, "atom")) {
      auto name = trim(stmt.substr(4));
      if (!is_identifier(name)) throw ParseError(line, "invalid atom name '" + std::string(name) + "'");
      if (std::find(t.atoms.begin(), t.atoms.end(), name) != t.atoms.end()) {
        throw ParseError(line, "duplicate atom '" + std::string(name) + "'");
      }
      t.atoms.emplace_back(name);
    } else if (starts_with_word(stmt, "fact")) {
      Clause c;
      c.form = Clause::Form::Implication;
      c.literals = {literal_at(line, stmt.substr(4))};
      c.is_fact = true;
      t.clauses.push_back(std::move(c));
      clause_lines.push_back(line);
    } else if (starts_with_word(stmt, "rule")) {
      auto body_head = stmt.substr(4);
      auto arrow = body_head.find("->");
      if (arrow == std::string_view::npos) throw ParseError(line, "expected '->' in rule");
      Clause c;
      c.form = Clause::Form::Implication;
      c.body = literals_at(line, body_head.substr(0, arrow), '&');
      c.literals = {literal_at(line, body_head.substr(arrow + 2))};
      t.clauses.push_back(std::move(c));
      clause_lines.push_back(line);
    } else if (starts_with_word(stmt, "or")) {
      Clause c;
      c.form = Clause::Form::Disjunction;
      c.literals = literals_at(line, stmt.substr(2), '|');
      t.clauses.push_back(std::move(c));
      clause_lines.push_back(line);
    } else if (starts_with_word(stmt, "minimize")) {
      for (auto w : words(stmt.substr(8))) {
        if (!is_identifier(w)) throw ParseError(line, "invalid atom name '" + std::string(w) + "'");
        t.minimized.emplace_back(w);
        minimize_lines.emplace_back(line, std::string(w));
      }
    } else if (starts_with_word(stmt, "query")) {
      t.queries.push_back(literal_at(line, stmt.substr(5)));
      query_lines.push_back(line);
    } else {
      throw ParseError(line, "unknown statement '" + std::string(stmt) + "'");
    }
  });
  std::set<std::string> declared(t.atoms.begin(), t.atoms.end());
  for (const auto& [line, name] : minimize_lines) {
    if (!declared.count(name)) throw ParseError(line, "minimized atom '" + name + "' is not declared");
  }
  validate_with(t, &clause_lines, &query_lines);
  return t;
}

std::string serialize_theory(const Theory& t) {
  std::ostringstream out;
  for (const auto& a : t.atoms) out << "atom " << a << ".\n";
  for (const auto& c : t.clauses) {
    if (c.is_fact) {
      out << "fact " << c.literals.front().str() << ".\n";
    } else if (c.form == Clause::Form::Implication) {
      out << "rule ";
      for (std::size_t i = 0; i < c.body.size(); ++i) out << (i ? " & " : "") << c.body[i].str();
      out << " -> " << c.literals.front().str() << ".\n";
    } else {
      out << "or ";
      for (std::size_t i = 0; i < c.literals.size(); ++i) out << (i ? " | " : "") << c.literals[i].str();
      out << ".\n";
    }
  }
  if (!t.minimized.empty()) {
    out << "minimize";
    for (const auto& m : t.minimized) out << ' ' << m;
    out << ".\n";
  }
  for (const auto& q : t.queries) out << "query " << q.str() << ".\n";
  return out.str();
}

}  // namespace defeasor
