#include "defeasor/models.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "defeasor/errors.hpp"

namespace defeasor {

std::set<std::string> Model::true_atoms() const {
  std::set<std::string> out;
  for (const auto& [a, v] : assignment) {
    if (v) out.insert(a);
  }
  return out;
}

namespace {

using Bits = std::uint32_t;

// A clause as two masks: satisfied iff some positive atom is true or some
// negative atom is false.
struct MaskClause {
  Bits pos = 0;
  Bits neg = 0;
};

struct Compiled {
  std::vector<std::string> atoms;  // sorted
  std::vector<MaskClause> clauses;
  Bits minimized = 0;

  Bits bit(const std::string& atom) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
    return Bits{1} << static_cast<unsigned>(it - atoms.begin());
  }

  bool satisfied(Bits m) const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [m](const MaskClause& c) { return (m & c.pos) != 0 || (~m & c.neg) != 0; });
  }

  Model to_model(Bits m) const {
    Model out;
    for (std::size_t i = 0; i < atoms.size(); ++i) out.assignment[atoms[i]] = ((m >> i) & 1u) != 0;
    return out;
  }
};

Compiled compile_theory(const Theory& t) {
  t.validate();
  if (t.atoms.size() > kMaxModelAtoms) {
    throw InputError("theory has " + std::to_string(t.atoms.size()) + " atoms; at most " +
                     std::to_string(kMaxModelAtoms) + " are supported");
  }
  Compiled c;
  c.atoms = t.atoms;
  std::sort(c.atoms.begin(), c.atoms.end());
  for (const auto& cl : t.clauses) {
    MaskClause mc;
    for (const auto& l : cl.disjuncts()) (l.negated ? mc.neg : mc.pos) |= c.bit(l.atom);
    c.clauses.push_back(mc);
  }
  for (const auto& m : t.minimized) c.minimized |= c.bit(m);
  return c;
}

std::vector<Bits> satisfying(const Compiled& c) {
  std::vector<Bits> out;
  const std::uint64_t total = std::uint64_t{1} << c.atoms.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (c.satisfied(static_cast<Bits>(m))) out.push_back(static_cast<Bits>(m));
  }
  return out;
}

std::vector<Bits> minimal_assignments(const Compiled& c) {
  const auto models = satisfying(c);
  std::vector<Bits> ab_sets;
  for (auto m : models) ab_sets.push_back(m & c.minimized);
  std::sort(ab_sets.begin(), ab_sets.end(),
            [](Bits a, Bits b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
  ab_sets.erase(std::unique(ab_sets.begin(), ab_sets.end()), ab_sets.end());

  // Visiting by cardinality, any proper subset of a set was seen before it,
  // and every non-minimal set contains some minimal one.
  std::vector<Bits> minimal;
  for (auto s : ab_sets) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [s](Bits x) { return (s & x) == x && x != s; });
    if (!dominated) minimal.push_back(s);
  }
  std::vector<Bits> out;
  for (auto m : models) {
    if (std::find(minimal.begin(), minimal.end(), m & c.minimized) != minimal.end()) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<Model> enumerate_models(const Theory& t) {
  const auto c = compile_theory(t);
  std::vector<Model> out;
  for (auto m : satisfying(c)) out.push_back(c.to_model(m));
  return out;
}

std::vector<Model> minimal_models(const Theory& t) {
  const auto c = compile_theory(t);
  std::vector<Model> out;
  for (auto m : minimal_assignments(c)) out.push_back(c.to_model(m));
  return out;
}

Entailment entailment(const Theory& t, const Literal& lit) {
  const auto c = compile_theory(t);
  if (!std::binary_search(c.atoms.begin(), c.atoms.end(), lit.atom)) {
    throw InputError("query on undeclared atom '" + lit.atom + "'");
  }
  const auto minimal = minimal_assignments(c);
  const Bits b = c.bit(lit.atom);
  Entailment e;
  e.minimal_models = minimal.size();
  e.vacuous = minimal.empty();
  e.holds = std::all_of(minimal.begin(), minimal.end(), [&](Bits m) { return ((m & b) != 0) != lit.negated; });
  return e;
}

bool holds_in_all_minimal(const Theory& t, const Literal& lit) { return entailment(t, lit).holds; }

}  // namespace defeasor
