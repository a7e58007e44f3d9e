#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "defeasor/literal.hpp"

namespace defeasor {

/// An implication `body -> head` or a disjunction `l1 | l2 | ...`.
struct Clause {
  enum class Form { Implication, Disjunction };

  Form form = Form::Disjunction;
  std::vector<Literal> body;     // implication only; empty for facts
  std::vector<Literal> literals; // implication: the single head; disjunction: the disjuncts
  bool is_fact = false;          // came from a `fact` statement

  /// The clause as a set of disjuncts: negated body plus head/literals.
  std::vector<Literal> disjuncts() const;
};

/// Propositional theory with designated atoms to minimize.
///
/// Theory text format, one statement per line:
///
///   atom NAME.   fact L.   rule L1 & L2 -> L.   or L1 | L2.
///   minimize A1 A2.   query L.
struct Theory {
  std::vector<std::string> atoms;     // declaration order
  std::vector<Clause> clauses;
  std::vector<std::string> minimized;
  std::vector<Literal> queries;

  /// Throws InputError on undeclared atoms, duplicates or empty clauses.
  void validate() const;
};

Theory parse_theory(std::string_view text);
std::string serialize_theory(const Theory& t);

}  // namespace defeasor
