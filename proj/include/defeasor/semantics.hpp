#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defeasor/framework.hpp"

namespace defeasor {

enum class SemanticsKind { Grounded, Complete, Preferred, Stable };
enum class Label { In, Out, Undec };
enum class Status { Justified, Defensible, Overruled };

std::string_view to_string(SemanticsKind k);
std::string_view to_string(Label l);
std::string_view to_string(Status s);
std::optional<SemanticsKind> parse_semantics(std::string_view name);
std::optional<Status> parse_status(std::string_view name);

inline constexpr SemanticsKind kAllSemantics[] = {SemanticsKind::Grounded, SemanticsKind::Complete,
                                                  SemanticsKind::Preferred, SemanticsKind::Stable};

/// A total labelling, aligned with Framework::args().
struct Labelling {
  std::vector<Label> labels;

  ArgSet in_set(const Framework& f) const;
  bool operator==(const Labelling&) const = default;
};

/// Arguments all of whose defeaters are defeated by a member of `s`.
/// Throws InputError if `s` names an unknown argument.
ArgSet characteristic_function(const Framework& f, const ArgSet& s);

/// Least fixpoint of the characteristic function, iterated from the empty set.
ArgSet grounded_extension(const Framework& f);

/// Every legal in/out/undec labelling, in lexicographic order of the label
/// vector (In < Out < Undec) over the sorted arguments.
std::vector<Labelling> complete_labellings(const Framework& f);

std::vector<ArgSet> complete_extensions(const Framework& f);

/// Subset-maximal complete In-sets. Never empty.
std::vector<ArgSet> preferred_extensions(const Framework& f);

/// Complete In-sets whose labelling has no Undec. May be empty.
std::vector<ArgSet> stable_extensions(const Framework& f);

/// Extensions of one semantics, computed once and reused for status queries.
struct Evaluation {
  SemanticsKind kind = SemanticsKind::Grounded;
  std::vector<ArgSet> extensions;
  /// Stable semantics only: the framework has no stable extension.
  bool no_stable_extension = false;
};

Evaluation evaluate(const Framework& f, SemanticsKind kind);

/// Grounded: Justified iff in the grounded extension, Overruled iff defeated
/// by a member of it. Other kinds: Justified iff in every extension,
/// Overruled iff in none. With no stable extension every argument is
/// Defensible.
Status argument_status(const Framework& f, const Evaluation& eval, std::string_view arg);
Status argument_status(const Framework& f, std::string_view arg, SemanticsKind kind);

bool conflict_free(const Framework& f, const ArgSet& s);
bool admissible(const Framework& f, const ArgSet& s);

}  // namespace defeasor
