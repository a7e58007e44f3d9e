#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defeasor/literal.hpp"

namespace defeasor {

using ArgId = std::string;
using ArgSet = std::set<ArgId>;
using ArgPair = std::pair<ArgId, ArgId>;

/// Declarations as they appear in a framework file, in declaration order.
struct FrameworkSpec {
  std::vector<ArgId> args;
  std::vector<ArgPair> attacks;     // (attacker, target)
  std::vector<ArgPair> subargs;     // (child, parent)
  std::vector<std::pair<ArgId, Conclusion>> conclusions;
};

/// An abstract argumentation framework.
///
/// Arguments are kept in lexicographic order and addressed by their index in
/// that order. On construction the defeat relation is closed under
/// subargument propagation: whoever defeats a subargument of `p` also
/// defeats `p`. All semantics therefore work on a plain defeat graph.
class Framework {
 public:
  Framework() = default;

  /// Validates and closes `spec`. Throws InputError on unknown names, on a
  /// reflexive or cyclic subargument relation, or on conflicting labels.
  explicit Framework(const FrameworkSpec& spec);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<ArgId>& args() const noexcept { return names_; }
  const ArgId& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Like find() but throws InputError for unknown ids.
  std::size_t index(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }

  bool defeats(std::size_t attacker, std::size_t target) const {
    return defeat_[attacker * names_.size() + target] != 0;
  }
  const std::vector<std::size_t>& attackers(std::size_t i) const { return attackers_.at(i); }
  const std::vector<std::size_t>& targets(std::size_t i) const { return targets_.at(i); }

  /// Direct parents: arguments having `i` as an immediate subargument.
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_.at(i); }
  /// Every argument having `i` as a proper subargument, transitively.
  const std::vector<std::size_t>& supers(std::size_t i) const { return supers_.at(i); }

  const std::optional<Conclusion>& conclusion(std::size_t i) const { return conclusions_.at(i); }
  bool has_conclusions() const noexcept;

  /// Closed defeat relation as sorted name pairs.
  std::vector<ArgPair> defeat_pairs() const;
  /// Direct subargument pairs (child, parent), sorted.
  std::vector<ArgPair> subarg_pairs() const;

  /// The framework restricted to the arguments not in `removed`.
  Framework without(const ArgSet& removed) const;

  /// A canonical spec: sorted args, closed defeats, direct subargs, labels.
  FrameworkSpec to_spec() const;

  bool operator==(const Framework& other) const;

 private:
  std::vector<ArgId> names_;
  std::vector<char> defeat_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> supers_;
  std::vector<std::optional<Conclusion>> conclusions_;
};

/// `{A, C}`; the empty set prints as `{}`.
std::string format_set(const ArgSet& s);

}  // namespace defeasor
