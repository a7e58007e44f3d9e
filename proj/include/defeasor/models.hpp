#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "defeasor/theory.hpp"

namespace defeasor {

inline constexpr std::size_t kMaxModelAtoms = 24;

/// A total truth assignment over the theory's atoms.
struct Model {
  std::map<std::string, bool> assignment;

  bool value(const std::string& atom) const { return assignment.at(atom); }
  bool satisfies(const Literal& l) const { return value(l.atom) != l.negated; }
  std::set<std::string> true_atoms() const;

  bool operator==(const Model&) const = default;
};

/// All satisfying assignments, ordered by the binary number they form over
/// the lexicographically sorted atoms (first atom least significant).
/// Throws InputError for more than kMaxModelAtoms atoms.
std::vector<Model> enumerate_models(const Theory& t);

/// Models whose set of true minimized atoms is subset-minimal; all other
/// atoms vary. An unsatisfiable theory yields an empty list.
std::vector<Model> minimal_models(const Theory& t);

struct Entailment {
  bool holds = false;
  bool vacuous = false;  // no minimal model: holds trivially
  std::size_t minimal_models = 0;
};

Entailment entailment(const Theory& t, const Literal& lit);

/// True iff `lit` is true in every minimal model.
bool holds_in_all_minimal(const Theory& t, const Literal& lit);

}  // namespace defeasor
