#pragma once

#include <map>
#include <vector>

#include "defeasor/framework.hpp"
#include "defeasor/semantics.hpp"

namespace defeasor {

/// Distinct conclusion labels of `f`, sorted.
std::vector<Conclusion> concluded(const Framework& f);

/// Grounded: Justified iff some concluding argument is Justified, Overruled
/// iff every concluding argument is Overruled. Other kinds: Justified iff
/// every extension contains some concluding argument (not necessarily the
/// same one), Overruled iff none does. An unsupported conclusion is
/// Overruled.
Status conclusion_status(const Framework& f, const Evaluation& eval, const Conclusion& c);
Status conclusion_status(const Framework& f, const Conclusion& c, SemanticsKind kind);

struct ConclusionReport {
  Conclusion conclusion;
  bool supported = false;  // some argument concludes it
  std::map<SemanticsKind, Status> status;
  bool floating = false;   // under preferred semantics
};

ConclusionReport conclusion_report(const Framework& f, const Conclusion& c);

/// Conclusions held in every extension, but by no single argument that is
/// in all of them. `kind` must be multi-extension; Grounded throws
/// InputError. With no extensions at all nothing floats.
std::vector<Conclusion> detect_floating_conclusions(const Framework& f, SemanticsKind kind);

struct ZombiePair {
  ArgId zombie;
  ArgId victim;

  auto operator<=>(const ZombiePair&) const = default;
};

/// Pairs (z, v) where z is Defensible under `kind` and removing z together
/// with every argument built on it changes the status of v.
std::vector<ZombiePair> detect_zombies(const Framework& f, SemanticsKind kind);

}  // namespace defeasor
