#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "defeasor/errors.hpp"
#include "defeasor/semantics.hpp"

namespace defeasor::corpus {

// A corpus is a directory with one subdirectory per case. Each case holds
// its input files (`*.af` frameworks, `*.rb` rule bases, `*.th` theories)
// and `expect.txt`, one expectation per line:
//
//   ENGINE[:FILE]  QUERY  SEMANTICS  EXPECTED  # anchor
//
// ENGINE is afcore, structarg, horty, abmodels or crosscheck. FILE defaults
// to framework.af, rulebase.rb or theory.th. SEMANTICS is a semantics name
// or `-`. Leading `#` lines describe the case as a whole.
//
//   afcore/structarg  arg:ID      SEM  Justified|Defensible|Overruled
//                     lit:L       SEM  Justified|Defensible|Overruled
//                     extensions  SEM  {{A,B},{C}}
//                     floating    SEM  {L,...}
//                     zombies     SEM  {(Z,V),...} | contains:{...} | empty | nonempty
//   horty             lit:L       -    true|false
//                     arg:ID      -    Survivor|StrictlyDefeated|MutualTie|DeadSubargument
//   abmodels          lit:L       -    true|false
//   crosscheck        FILE.rb     all  match
//
// crosscheck compiles FILE.rb and compares, for every literal labelled in
// framework.af and every semantics, the conclusion status in both.

/// Load-time problems with a case (missing files, malformed expectations).
class CorpusError : public Error {
 public:
  using Error::Error;
};

enum class Engine { AfCore, StructArg, Horty, AbModels, CrossCheck };

struct Expectation {
  Engine engine = Engine::AfCore;
  std::string input;  // file name inside the case directory
  std::string query;
  std::optional<SemanticsKind> semantics;
  std::string expected;
  std::string anchor;
  int line = 0;

  /// The expectation as written, without the anchor.
  std::string text() const;
};

struct Case {
  std::string id;
  std::filesystem::path dir;
  std::string description;
  std::vector<std::string> inputs;  // sorted file names, excluding expect.txt
  std::vector<Expectation> expectations;
};

struct Outcome {
  Expectation expectation;
  bool pass = false;
  std::string actual;
};

struct CaseReport {
  std::string id;
  std::vector<Outcome> outcomes;
  std::optional<std::string> error;  // load or evaluation error
  std::chrono::microseconds runtime{0};

  bool passed() const;
};

struct Summary {
  std::vector<CaseReport> cases;  // sorted by id

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
};

/// `DEFEASOR_CORPUS_DIR` when set, `fallback` otherwise.
std::filesystem::path resolve_corpus_dir(const std::filesystem::path& fallback);

/// Sorted case ids: subdirectories containing expect.txt.
std::vector<std::string> list_cases(const std::filesystem::path& corpus_dir);

/// Throws CorpusError naming the case on any load problem.
Case load_case(const std::filesystem::path& corpus_dir, const std::string& id);

CaseReport run_case(const Case& c);
/// Throws CorpusError for unknown ids.
CaseReport run_case(const std::filesystem::path& corpus_dir, const std::string& id);

/// Runs every case whose id starts with one of `prefixes` (all cases when
/// empty). Cases run concurrently; a case that fails to load is reported as
/// failed with its error.
Summary run_all(const std::filesystem::path& corpus_dir, const std::vector<std::string>& prefixes = {});

struct RenderOptions {
  bool timing = false;
};

std::string render_text(const Summary& s, RenderOptions opts = {});
std::string render_json(const Summary& s, RenderOptions opts = {});

}  // namespace defeasor::corpus
