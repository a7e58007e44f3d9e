#include "defeasor/conclusions.hpp"

#include <algorithm>
#include <set>

#include "defeasor/errors.hpp"

namespace defeasor {

namespace {

std::vector<std::size_t> supporters(const Framework& f, const Conclusion& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.conclusion(i) && *f.conclusion(i) == c) out.push_back(i);
  }
  return out;
}

bool extension_supports(const Framework& f, const ArgSet& ext, const std::vector<std::size_t>& sup) {
  return std::any_of(sup.begin(), sup.end(), [&](std::size_t i) { return ext.count(f.name(i)) > 0; });
}

}  // namespace

std::vector<Conclusion> concluded(const Framework& f) {
  std::set<Conclusion> seen;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.conclusion(i)) seen.insert(*f.conclusion(i));
  }
  return {seen.begin(), seen.end()};
}

Status conclusion_status(const Framework& f, const Evaluation& eval, const Conclusion& c) {
  const auto sup = supporters(f, c);
  if (sup.empty()) return Status::Overruled;
  if (eval.kind == SemanticsKind::Grounded) {
    bool any_defensible = false;
    for (auto i : sup) {
      auto s = argument_status(f, eval, f.name(i));
      if (s == Status::Justified) return Status::Justified;
      any_defensible = any_defensible || s == Status::Defensible;
    }
    return any_defensible ? Status::Defensible : Status::Overruled;
  }
  if (eval.extensions.empty()) return Status::Defensible;
  auto hits = std::count_if(eval.extensions.begin(), eval.extensions.end(),
                            [&](const ArgSet& e) { return extension_supports(f, e, sup); });
  if (hits == static_cast<long>(eval.extensions.size())) return Status::Justified;
  return hits == 0 ? Status::Overruled : Status::Defensible;
}

Status conclusion_status(const Framework& f, const Conclusion& c, SemanticsKind kind) {
  return conclusion_status(f, evaluate(f, kind), c);
}

ConclusionReport conclusion_report(const Framework& f, const Conclusion& c) {
  ConclusionReport r;
  r.conclusion = c;
  r.supported = !supporters(f, c).empty();
  for (auto k : kAllSemantics) r.status[k] = conclusion_status(f, c, k);
  const auto floating = detect_floating_conclusions(f, SemanticsKind::Preferred);
  r.floating = std::find(floating.begin(), floating.end(), c) != floating.end();
  return r;
}

std::vector<Conclusion> detect_floating_conclusions(const Framework& f, SemanticsKind kind) {
  if (kind == SemanticsKind::Grounded) {
    throw InputError("floating conclusions need a multi-extension semantics");
  }
  const auto eval = evaluate(f, kind);
  std::vector<Conclusion> out;
  if (eval.extensions.empty()) return out;
  for (const auto& c : concluded(f)) {
    const auto sup = supporters(f, c);
    bool everywhere = std::all_of(eval.extensions.begin(), eval.extensions.end(),
                                  [&](const ArgSet& e) { return extension_supports(f, e, sup); });
    if (!everywhere) continue;
    bool single_justified = std::any_of(sup.begin(), sup.end(), [&](std::size_t i) {
      return std::all_of(eval.extensions.begin(), eval.extensions.end(),
                         [&](const ArgSet& e) { return e.count(f.name(i)) > 0; });
    });
    if (!single_justified) out.push_back(c);
  }
  return out;
}

std::vector<ZombiePair> detect_zombies(const Framework& f, SemanticsKind kind) {
  const auto eval = evaluate(f, kind);
  std::vector<Status> before(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) before[i] = argument_status(f, eval, f.name(i));

  std::vector<ZombiePair> out;
  for (std::size_t z = 0; z < f.size(); ++z) {
    if (before[z] != Status::Defensible) continue;
    ArgSet removed{f.name(z)};
    for (auto p : f.supers(z)) removed.insert(f.name(p));
    const auto reduced = f.without(removed);
    const auto reduced_eval = evaluate(reduced, kind);
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (removed.count(f.name(v))) continue;
      if (argument_status(reduced, reduced_eval, f.name(v)) != before[v]) out.push_back({f.name(z), f.name(v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace defeasor
