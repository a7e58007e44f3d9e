#include "defeasor/framework.hpp"

#include <algorithm>
#include <functional>

#include "defeasor/errors.hpp"

namespace defeasor {

namespace {

void require_known(const std::set<ArgId>& known, const ArgId& id, const char* where) {
  if (!known.count(id)) {
    throw InputError(std::string("unknown argument '") + id + "' in " + where);
  }
}

}  // namespace

Framework::Framework(const FrameworkSpec& spec) {
  std::set<ArgId> known;
  for (const auto& a : spec.args) {
    if (!known.insert(a).second) throw InputError("argument '" + a + "' declared twice");
  }
  for (const auto& [a, b] : spec.attacks) {
    require_known(known, a, "attack");
    require_known(known, b, "attack");
  }
  for (const auto& [c, p] : spec.subargs) {
    require_known(known, c, "subargument");
    require_known(known, p, "subargument");
    if (c == p) throw InputError("argument '" + c + "' declared as its own subargument");
  }
  for (const auto& [a, _] : spec.conclusions) require_known(known, a, "conclusion");

  names_.assign(known.begin(), known.end());
  const std::size_t n = names_.size();
  defeat_.assign(n * n, 0);
  attackers_.assign(n, {});
  targets_.assign(n, {});
  parents_.assign(n, {});
  supers_.assign(n, {});
  conclusions_.assign(n, std::nullopt);

  for (const auto& [a, c] : spec.conclusions) {
    auto i = index(a);
    if (conclusions_[i] && *conclusions_[i] != c) {
      throw InputError("argument '" + a + "' has conflicting conclusions " + to_string(*conclusions_[i]) +
                       " and " + to_string(c));
    }
    conclusions_[i] = c;
  }

  for (const auto& [c, p] : spec.subargs) parents_[index(c)].push_back(index(p));
  for (auto& ps : parents_) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }

  // Transitive supers by DFS; a node on the current path twice means a cycle.
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    std::vector<std::size_t> acc;
    for (auto p : parents_[v]) {
      if (state[p] == 1) throw InputError("subargument relation is cyclic at '" + names_[p] + "'");
      if (state[p] == 0) visit(p);
      acc.push_back(p);
      acc.insert(acc.end(), supers_[p].begin(), supers_[p].end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    supers_[v] = std::move(acc);
    state[v] = 2;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0) visit(v);
  }

  for (const auto& [a, b] : spec.attacks) {
    auto x = index(a);
    auto t = index(b);
    defeat_[x * n + t] = 1;
    for (auto p : supers_[t]) defeat_[x * n + p] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < n; ++t) {
      if (defeat_[x * n + t]) {
        attackers_[t].push_back(x);
        targets_[x].push_back(t);
      }
    }
  }
}

std::optional<std::size_t> Framework::find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Framework::index(std::string_view id) const {
  auto i = find(id);
  if (!i) throw InputError("unknown argument '" + std::string(id) + "'");
  return *i;
}

bool Framework::has_conclusions() const noexcept {
  return std::any_of(conclusions_.begin(), conclusions_.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<ArgPair> Framework::defeat_pairs() const {
  std::vector<ArgPair> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto t : targets_[x]) out.emplace_back(names_[x], names_[t]);
  }
  return out;
}

std::vector<ArgPair> Framework::subarg_pairs() const {
  std::vector<ArgPair> out;
  for (std::size_t c = 0; c < size(); ++c) {
    for (auto p : parents_[c]) out.emplace_back(names_[c], names_[p]);
  }
  return out;
}

Framework Framework::without(const ArgSet& removed) const {
  FrameworkSpec spec;
  auto keep = [&](std::size_t i) { return !removed.count(names_[i]); };
  for (std::size_t i = 0; i < size(); ++i) {
    if (!keep(i)) continue;
    spec.args.push_back(names_[i]);
    if (conclusions_[i]) spec.conclusions.emplace_back(names_[i], *conclusions_[i]);
    for (auto t : targets_[i]) {
      if (keep(t)) spec.attacks.emplace_back(names_[i], names_[t]);
    }
    for (auto p : parents_[i]) {
      if (keep(p)) spec.subargs.emplace_back(names_[i], names_[p]);
    }
  }
  return Framework(spec);
}

FrameworkSpec Framework::to_spec() const {
  FrameworkSpec spec;
  spec.args = names_;
  spec.attacks = defeat_pairs();
  spec.subargs = subarg_pairs();
  for (std::size_t i = 0; i < size(); ++i) {
    if (conclusions_[i]) spec.conclusions.emplace_back(names_[i], *conclusions_[i]);
  }
  return spec;
}

bool Framework::operator==(const Framework& other) const {
  return names_ == other.names_ && defeat_ == other.defeat_ && parents_ == other.parents_ &&
         conclusions_ == other.conclusions_;
}

std::string format_set(const ArgSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

}  // namespace defeasor
