#include "defeasor/horty.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace defeasor {

std::string_view to_string(DiscardReason r) {
  switch (r) {
    case DiscardReason::StrictlyDefeated: return "StrictlyDefeated";
    case DiscardReason::MutualTie: return "MutualTie";
    case DiscardReason::DeadSubargument: return "DeadSubargument";
  }
  return "?";
}

std::string_view to_string(HortyPhase p) {
  switch (p) {
    case HortyPhase::Construct: return "construct";
    case HortyPhase::Strict: return "strict";
    case HortyPhase::Tie: return "tie";
  }
  return "?";
}

bool HortyResult::survived(std::string_view id) const {
  return std::any_of(survivors.begin(), survivors.end(), [&](const Argument& a) { return a.id == id; });
}

const Discard* HortyResult::discard_of(std::string_view id) const {
  auto it = std::find_if(discarded.begin(), discarded.end(), [&](const Discard& d) { return d.argument.id == id; });
  return it == discarded.end() ? nullptr : &*it;
}

HortyResult horty_evaluate(const RuleBase& rb, int height_cap) {
  const auto args = construct_arguments(rb, height_cap);
  const auto framework = compute_defeats(args, rb);

  int max_height = 0;
  for (const auto& a : args) max_height = std::max(max_height, a.height);

  // Framework indices coincide with positions in `args`: both are sorted by id.
  enum class State { Pending, Live, Dead };
  std::vector<State> state(args.size(), State::Pending);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < args.size(); ++i) index[args[i].id] = i;

  HortyResult result;
  auto kill = [&](std::size_t i, DiscardReason reason, int h, HortyPhase phase, std::vector<ArgId> culprits) {
    result.discarded.push_back({args[i], reason, h, phase, std::move(culprits)});
  };
  auto live_set = [&] {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (state[i] == State::Live) live.push_back(i);
    }
    return live;
  };

  for (int h = 0; h <= max_height; ++h) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].height != h) continue;
      std::vector<ArgId> dead;
      for (const auto& s : args[i].subarguments) {
        if (state[index.at(s)] != State::Live) dead.push_back(s);
      }
      if (dead.empty()) {
        state[i] = State::Live;
      } else {
        state[i] = State::Dead;
        kill(i, DiscardReason::DeadSubargument, h, HortyPhase::Construct, std::move(dead));
      }
    }

    auto live = live_set();
    std::vector<std::size_t> strict_victims;
    for (auto y : live) {
      std::vector<ArgId> by;
      for (auto x : live) {
        if (framework.defeats(x, y) && !framework.defeats(y, x)) by.push_back(args[x].id);
      }
      if (!by.empty()) {
        strict_victims.push_back(y);
        kill(y, DiscardReason::StrictlyDefeated, h, HortyPhase::Strict, std::move(by));
      }
    }
    for (auto y : strict_victims) state[y] = State::Dead;

    live = live_set();
    std::vector<std::size_t> tie_victims;
    for (auto y : live) {
      std::vector<ArgId> with;
      for (auto x : live) {
        if (framework.defeats(x, y) && framework.defeats(y, x)) with.push_back(args[x].id);
      }
      if (!with.empty()) {
        tie_victims.push_back(y);
        kill(y, DiscardReason::MutualTie, h, HortyPhase::Tie, std::move(with));
      }
    }
    for (auto y : tie_victims) state[y] = State::Dead;
  }

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (state[i] == State::Live) {
      result.survivors.push_back(args[i]);
      result.conclusions.insert(args[i].conclusion);
    }
  }
  return result;
}

bool horty_conclusion_holds(const RuleBase& rb, const Literal& lit, int height_cap) {
  return horty_evaluate(rb, height_cap).conclusions.count(lit) > 0;
}

std::string horty_trace(const HortyResult& r) {
  std::ostringstream out;
  for (const auto& d : r.discarded) {
    out << d.height << ' ' << to_string(d.phase) << ' ' << d.argument.id << ' ' << to_string(d.reason) << " [";
    for (std::size_t i = 0; i < d.culprits.size(); ++i) out << (i ? ", " : "") << d.culprits[i];
    out << "]\n";
  }
  return out.str();
}

}  // namespace defeasor
