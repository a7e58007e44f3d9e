#include "defeasor/semantics.hpp"

#include <algorithm>

#include "defeasor/errors.hpp"

namespace defeasor {

std::string_view to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::Grounded: return "grounded";
    case SemanticsKind::Complete: return "complete";
    case SemanticsKind::Preferred: return "preferred";
    case SemanticsKind::Stable: return "stable";
  }
  return "?";
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::In: return "In";
    case Label::Out: return "Out";
    case Label::Undec: return "Undec";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Justified: return "Justified";
    case Status::Defensible: return "Defensible";
    case Status::Overruled: return "Overruled";
  }
  return "?";
}

std::optional<SemanticsKind> parse_semantics(std::string_view name) {
  for (auto k : kAllSemantics) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<Status> parse_status(std::string_view name) {
  for (auto s : {Status::Justified, Status::Defensible, Status::Overruled}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

ArgSet Labelling::in_set(const Framework& f) const {
  ArgSet out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == Label::In) out.insert(f.name(i));
  }
  return out;
}

namespace {

using Mask = std::vector<char>;

Mask to_mask(const Framework& f, const ArgSet& s) {
  Mask m(f.size(), 0);
  for (const auto& a : s) m[f.index(a)] = 1;
  return m;
}

ArgSet to_set(const Framework& f, const Mask& m) {
  ArgSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.insert(f.name(i));
  }
  return out;
}

Mask apply_characteristic(const Framework& f, const Mask& s) {
  Mask out(f.size(), 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    bool defended = std::all_of(f.attackers(a).begin(), f.attackers(a).end(), [&](std::size_t b) {
      return std::any_of(f.attackers(b).begin(), f.attackers(b).end(), [&](std::size_t c) { return s[c] != 0; });
    });
    out[a] = defended ? 1 : 0;
  }
  return out;
}

Mask grounded_mask(const Framework& f) {
  Mask s(f.size(), 0);
  while (true) {
    Mask next = apply_characteristic(f, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

constexpr int kUnassigned = -1;

/// Backtracking enumeration of complete labellings. The grounded labelling
/// is fixed up front since every complete labelling extends it.
class LabellingSearch {
 public:
  explicit LabellingSearch(const Framework& f) : f_(f), labels_(f.size(), kUnassigned) {
    Mask g = grounded_mask(f);
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (g[a]) {
        labels_[a] = static_cast<int>(Label::In);
        for (auto t : f.targets(a)) labels_[t] = static_cast<int>(Label::Out);
      }
    }
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (labels_[a] == kUnassigned) free_.push_back(a);
    }
  }

  std::vector<Labelling> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  bool legal(std::size_t v) const {
    const auto label = labels_[v];
    if (label == kUnassigned) return true;
    bool all_assigned = true;
    bool any_in = false;
    bool all_out = true;
    for (auto b : f_.attackers(v)) {
      const auto lb = labels_[b];
      if (lb == kUnassigned) {
        all_assigned = false;
        all_out = false;
        continue;
      }
      if (lb == static_cast<int>(Label::In)) any_in = true;
      if (lb != static_cast<int>(Label::Out)) all_out = false;
    }
    switch (static_cast<Label>(label)) {
      case Label::In:
        // Every assigned attacker must be Out.
        for (auto b : f_.attackers(v)) {
          if (labels_[b] != kUnassigned && labels_[b] != static_cast<int>(Label::Out)) return false;
        }
        return true;
      case Label::Out:
        return any_in || !all_assigned;
      case Label::Undec:
        return !any_in && !(all_assigned && all_out);
    }
    return false;
  }

  void descend(std::size_t depth) {
    if (depth == free_.size()) {
      Labelling l;
      l.labels.reserve(labels_.size());
      for (auto v : labels_) l.labels.push_back(static_cast<Label>(v));
      found_.push_back(std::move(l));
      return;
    }
    const auto v = free_[depth];
    for (auto label : {Label::In, Label::Out, Label::Undec}) {
      labels_[v] = static_cast<int>(label);
      bool ok = legal(v);
      for (auto t : f_.targets(v)) {
        if (!ok) break;
        ok = legal(t);
      }
      if (ok) descend(depth + 1);
    }
    labels_[v] = kUnassigned;
  }

  const Framework& f_;
  std::vector<int> labels_;
  std::vector<std::size_t> free_;
  std::vector<Labelling> found_;
};

bool subset_of(const ArgSet& a, const ArgSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ArgSet characteristic_function(const Framework& f, const ArgSet& s) {
  return to_set(f, apply_characteristic(f, to_mask(f, s)));
}

ArgSet grounded_extension(const Framework& f) { return to_set(f, grounded_mask(f)); }

std::vector<Labelling> complete_labellings(const Framework& f) { return LabellingSearch(f).run(); }

std::vector<ArgSet> complete_extensions(const Framework& f) {
  std::vector<ArgSet> out;
  for (const auto& l : complete_labellings(f)) out.push_back(l.in_set(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArgSet> preferred_extensions(const Framework& f) {
  auto complete = complete_extensions(f);
  std::vector<ArgSet> out;
  for (const auto& s : complete) {
    bool maximal = std::none_of(complete.begin(), complete.end(),
                                [&](const ArgSet& t) { return t.size() > s.size() && subset_of(s, t); });
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<ArgSet> stable_extensions(const Framework& f) {
  std::vector<ArgSet> out;
  for (const auto& l : complete_labellings(f)) {
    if (std::find(l.labels.begin(), l.labels.end(), Label::Undec) == l.labels.end()) out.push_back(l.in_set(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Evaluation evaluate(const Framework& f, SemanticsKind kind) {
  Evaluation e;
  e.kind = kind;
  switch (kind) {
    case SemanticsKind::Grounded: e.extensions = {grounded_extension(f)}; break;
    case SemanticsKind::Complete: e.extensions = complete_extensions(f); break;
    case SemanticsKind::Preferred: e.extensions = preferred_extensions(f); break;
    case SemanticsKind::Stable:
      e.extensions = stable_extensions(f);
      e.no_stable_extension = e.extensions.empty();
      break;
  }
  return e;
}

Status argument_status(const Framework& f, const Evaluation& eval, std::string_view arg) {
  const auto a = f.index(arg);
  const auto& name = f.name(a);
  if (eval.kind == SemanticsKind::Grounded) {
    const auto& g = eval.extensions.front();
    if (g.count(name)) return Status::Justified;
    for (auto b : f.attackers(a)) {
      if (g.count(f.name(b))) return Status::Overruled;
    }
    return Status::Defensible;
  }
  if (eval.extensions.empty()) return Status::Defensible;
  auto hits = std::count_if(eval.extensions.begin(), eval.extensions.end(),
                            [&](const ArgSet& e) { return e.count(name) > 0; });
  if (hits == static_cast<long>(eval.extensions.size())) return Status::Justified;
  if (hits == 0) return Status::Overruled;
  return Status::Defensible;
}

Status argument_status(const Framework& f, std::string_view arg, SemanticsKind kind) {
  f.index(arg);
  return argument_status(f, evaluate(f, kind), arg);
}

bool conflict_free(const Framework& f, const ArgSet& s) {
  for (const auto& a : s) {
    for (const auto& b : s) {
      if (f.defeats(f.index(a), f.index(b))) return false;
    }
  }
  return true;
}

bool admissible(const Framework& f, const ArgSet& s) {
  return conflict_free(f, s) && subset_of(s, characteristic_function(f, s));
}

}  // namespace defeasor
