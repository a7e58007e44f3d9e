#include "defeasor/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>

#include "defeasor/af_format.hpp"
#include "defeasor/arguments.hpp"
#include "defeasor/conclusions.hpp"
#include "defeasor/horty.hpp"
#include "defeasor/io.hpp"
#include "defeasor/models.hpp"
#include "defeasor/rulebase.hpp"
#include "defeasor/theory.hpp"
#include "json.hpp"
#include "text_util.hpp"

namespace fs = std::filesystem;

namespace defeasor::corpus {

namespace {

constexpr const char* kExpectFile = "expect.txt";

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::AfCore: return "afcore";
    case Engine::StructArg: return "structarg";
    case Engine::Horty: return "horty";
    case Engine::AbModels: return "abmodels";
    case Engine::CrossCheck: return "crosscheck";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view s) {
  for (auto e : {Engine::AfCore, Engine::StructArg, Engine::Horty, Engine::AbModels, Engine::CrossCheck}) {
    if (engine_name(e) == s) return e;
  }
  return std::nullopt;
}

std::string default_input(Engine e) {
  switch (e) {
    case Engine::AfCore:
    case Engine::CrossCheck: return "framework.af";
    case Engine::StructArg:
    case Engine::Horty: return "rulebase.rb";
    case Engine::AbModels: return "theory.th";
  }
  return {};
}

// Expected/actual values: names, sets `{...}` and pairs `(a,b)`, compared
// in canonical form so member order in expect.txt does not matter.
struct Value {
  enum class Kind { Atom, Set, Pair } kind = Kind::Atom;
  std::string atom;
  std::vector<Value> items;
};

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  Value parse() {
    Value v = value();
    if (pos_ != s_.size()) throw CorpusError("trailing text in value '" + std::string(s_) + "'");
    return v;
  }

 private:
  Value value() {
    if (pos_ < s_.size() && (s_[pos_] == '{' || s_[pos_] == '(')) {
      const bool set = s_[pos_] == '{';
      const char close = set ? '}' : ')';
      ++pos_;
      Value v;
      v.kind = set ? Value::Kind::Set : Value::Kind::Pair;
      if (pos_ < s_.size() && s_[pos_] == close) {
        ++pos_;
      } else {
        while (true) {
          v.items.push_back(value());
          if (pos_ >= s_.size()) throw CorpusError("unterminated value '" + std::string(s_) + "'");
          if (s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (s_[pos_] != close) throw CorpusError("malformed value '" + std::string(s_) + "'");
          ++pos_;
          break;
        }
      }
      if (!set && v.items.size() != 2) throw CorpusError("pairs need two members in '" + std::string(s_) + "'");
      return v;
    }
    auto end = s_.find_first_of(",{}()", pos_);
    if (end == std::string_view::npos) end = s_.size();
    if (end == pos_) throw CorpusError("empty member in value '" + std::string(s_) + "'");
    Value v;
    v.atom = std::string(s_.substr(pos_, end - pos_));
    pos_ = end;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string canonical(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Atom: return v.atom;
    case Value::Kind::Pair: return "(" + canonical(v.items[0]) + "," + canonical(v.items[1]) + ")";
    case Value::Kind::Set: {
      std::set<std::string> members;
      for (const auto& i : v.items) members.insert(canonical(i));
      std::string out = "{";
      bool first = true;
      for (const auto& m : members) {
        out += (first ? "" : ",") + m;
        first = false;
      }
      return out + "}";
    }
  }
  return {};
}

std::set<std::string> members(const Value& v) {
  std::set<std::string> out;
  for (const auto& i : v.items) out.insert(canonical(i));
  return out;
}

std::string set_of_sets(const std::vector<ArgSet>& sets) {
  Value outer;
  outer.kind = Value::Kind::Set;
  for (const auto& s : sets) {
    Value inner;
    inner.kind = Value::Kind::Set;
    for (const auto& a : s) inner.items.push_back(Value{Value::Kind::Atom, a, {}});
    outer.items.push_back(std::move(inner));
  }
  return canonical(outer);
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

void check_expectation(const Expectation& e) {
  auto need_semantics = [&](bool needed) {
    if (needed && !e.semantics) throw CorpusError("query '" + e.query + "' needs a semantics");
    if (!needed && e.semantics) throw CorpusError("query '" + e.query + "' takes '-' as semantics");
  };
  auto need_status = [&] {
    if (!parse_status(e.expected)) throw CorpusError("expected a status, got '" + e.expected + "'");
  };
  auto need_bool = [&] {
    if (e.expected != "true" && e.expected != "false") throw CorpusError("expected true/false, got '" + e.expected + "'");
  };
  auto need_value = [&](std::string_view v) { ValueParser(v).parse(); };
  auto need_lit = [&] {
    try {
      parse_conclusion(std::string_view(e.query).substr(4));
    } catch (const InputError& err) {
      throw CorpusError(err.what());
    }
  };

  switch (e.engine) {
    case Engine::AfCore:
    case Engine::StructArg:
      need_semantics(true);
      if (starts_with(e.query, "arg:")) {
        need_status();
      } else if (starts_with(e.query, "lit:")) {
        need_lit();
        need_status();
      } else if (e.query == "extensions" || e.query == "floating") {
        if (e.query == "floating" && e.semantics == SemanticsKind::Grounded) {
          throw CorpusError("floating conclusions need a multi-extension semantics");
        }
        need_value(e.expected);
      } else if (e.query == "zombies") {
        if (e.expected != "empty" && e.expected != "nonempty") {
          need_value(starts_with(e.expected, "contains:") ? std::string_view(e.expected).substr(9) : e.expected);
        }
      } else {
        throw CorpusError("unknown query '" + e.query + "'");
      }
      break;
    case Engine::Horty:
      need_semantics(false);
      if (starts_with(e.query, "lit:")) {
        need_lit();
        need_bool();
      } else if (starts_with(e.query, "arg:")) {
        static const std::set<std::string> fates{"Survivor", "StrictlyDefeated", "MutualTie", "DeadSubargument"};
        if (!fates.count(e.expected)) throw CorpusError("unknown horty fate '" + e.expected + "'");
      } else {
        throw CorpusError("unknown horty query '" + e.query + "'");
      }
      break;
    case Engine::AbModels:
      need_semantics(false);
      if (!starts_with(e.query, "lit:")) throw CorpusError("abmodels only answers lit: queries");
      need_lit();
      need_bool();
      break;
    case Engine::CrossCheck:
      if (e.expected != "match") throw CorpusError("crosscheck expects 'match'");
      break;
  }
}

Expectation parse_expectation(int line, std::string_view raw, const Case& c) {
  auto hash = raw.find('#');
  if (hash == std::string_view::npos) throw CorpusError("missing '# anchor'");
  Expectation e;
  e.line = line;
  e.anchor = std::string(detail::trim(raw.substr(hash + 1)));
  if (e.anchor.empty()) throw CorpusError("empty anchor");
  std::vector<std::string> tokens;
  std::istringstream in{std::string(raw.substr(0, hash))};
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() != 4) throw CorpusError("expected 'ENGINE QUERY SEMANTICS EXPECTED'");

  auto engine_token = std::string_view(tokens[0]);
  auto colon = engine_token.find(':');
  auto engine = parse_engine(engine_token.substr(0, colon));
  if (!engine) throw CorpusError("unknown engine '" + std::string(engine_token.substr(0, colon)) + "'");
  e.engine = *engine;
  e.input = colon == std::string_view::npos ? default_input(e.engine) : std::string(engine_token.substr(colon + 1));
  e.query = tokens[1];
  if (e.engine == Engine::CrossCheck) {
    if (tokens[2] != "all") throw CorpusError("crosscheck runs over 'all' semantics");
  } else if (tokens[2] != "-") {
    e.semantics = parse_semantics(tokens[2]);
    if (!e.semantics) throw CorpusError("unknown semantics '" + tokens[2] + "'");
  }
  e.expected = tokens[3];

  auto need_file = [&](const std::string& name) {
    if (std::find(c.inputs.begin(), c.inputs.end(), name) == c.inputs.end()) {
      throw CorpusError("input file '" + name + "' not found");
    }
  };
  need_file(e.input);
  if (e.engine == Engine::CrossCheck) need_file(e.query);
  check_expectation(e);
  return e;
}

// Lazily parsed inputs of one case.
class CaseInputs {
 public:
  explicit CaseInputs(const Case& c) : case_(c) {}

  const Framework& framework(const std::string& file) {
    auto it = frameworks_.find(file);
    if (it == frameworks_.end()) it = frameworks_.emplace(file, parse_framework(read(file))).first;
    return it->second;
  }

  const RuleBase& rulebase(const std::string& file) {
    auto it = rulebases_.find(file);
    if (it == rulebases_.end()) it = rulebases_.emplace(file, parse_rulebase(read(file))).first;
    return it->second;
  }

  const Framework& compiled(const std::string& file) {
    auto it = compiled_.find(file);
    if (it == compiled_.end()) it = compiled_.emplace(file, compile(rulebase(file))).first;
    return it->second;
  }

  const HortyResult& horty(const std::string& file) {
    auto it = horty_.find(file);
    if (it == horty_.end()) it = horty_.emplace(file, horty_evaluate(rulebase(file))).first;
    return it->second;
  }

  const Theory& theory(const std::string& file) {
    auto it = theories_.find(file);
    if (it == theories_.end()) it = theories_.emplace(file, parse_theory(read(file))).first;
    return it->second;
  }

 private:
  std::string read(const std::string& file) {
    try {
      return read_text_file(case_.dir / file);
    } catch (const Error& e) {
      throw CorpusError(e.what());
    }
  }

  const Case& case_;
  std::map<std::string, Framework> frameworks_;
  std::map<std::string, RuleBase> rulebases_;
  std::map<std::string, Framework> compiled_;
  std::map<std::string, HortyResult> horty_;
  std::map<std::string, Theory> theories_;
};

std::string framework_query(const Framework& f, const Expectation& e) {
  const auto kind = *e.semantics;
  if (starts_with(e.query, "arg:")) {
    auto id = e.query.substr(4);
    if (!f.contains(id)) return "no such argument";
    return std::string(to_string(argument_status(f, id, kind)));
  }
  if (starts_with(e.query, "lit:")) {
    return std::string(to_string(conclusion_status(f, parse_conclusion(e.query.substr(4)), kind)));
  }
  if (e.query == "extensions") return set_of_sets(evaluate(f, kind).extensions);
  if (e.query == "floating") {
    Value v;
    v.kind = Value::Kind::Set;
    for (const auto& c : detect_floating_conclusions(f, kind)) v.items.push_back(Value{Value::Kind::Atom, to_string(c), {}});
    return canonical(v);
  }
  // zombies
  Value v;
  v.kind = Value::Kind::Set;
  for (const auto& z : detect_zombies(f, kind)) {
    Value p;
    p.kind = Value::Kind::Pair;
    p.items = {Value{Value::Kind::Atom, z.zombie, {}}, Value{Value::Kind::Atom, z.victim, {}}};
    v.items.push_back(std::move(p));
  }
  return canonical(v);
}

bool matches(const Expectation& e, const std::string& actual) {
  const bool value_query = e.query == "extensions" || e.query == "floating" || e.query == "zombies";
  if (!value_query) return actual == e.expected;
  if (e.expected == "empty") return actual == "{}";
  if (e.expected == "nonempty") return actual != "{}";
  if (starts_with(e.expected, "contains:")) {
    auto want = members(ValueParser(std::string_view(e.expected).substr(9)).parse());
    auto have = members(ValueParser(actual).parse());
    return std::includes(have.begin(), have.end(), want.begin(), want.end());
  }
  return actual == canonical(ValueParser(e.expected).parse());
}

std::string crosscheck(CaseInputs& in, const Expectation& e) {
  const auto& abstract = in.framework(e.input);
  const auto& compiled = in.compiled(e.query);
  std::ostringstream mismatches;
  for (auto kind : kAllSemantics) {
    const auto ea = evaluate(abstract, kind);
    const auto ec = evaluate(compiled, kind);
    for (const auto& c : concluded(abstract)) {
      auto sa = conclusion_status(abstract, ea, c);
      auto sc = conclusion_status(compiled, ec, c);
      if (sa != sc) {
        mismatches << " " << to_string(c) << "@" << to_string(kind) << ":" << to_string(sa) << "/" << to_string(sc);
      }
    }
  }
  auto m = mismatches.str();
  return m.empty() ? "match" : "mismatch" + m;
}

std::string evaluate_expectation(CaseInputs& in, const Expectation& e) {
  switch (e.engine) {
    case Engine::AfCore: return framework_query(in.framework(e.input), e);
    case Engine::StructArg: return framework_query(in.compiled(e.input), e);
    case Engine::Horty: {
      const auto& r = in.horty(e.input);
      if (starts_with(e.query, "lit:")) {
        return r.conclusions.count(parse_conclusion(e.query.substr(4))) ? "true" : "false";
      }
      auto id = e.query.substr(4);
      if (r.survived(id)) return "Survivor";
      if (const auto* d = r.discard_of(id)) return std::string(to_string(d->reason));
      return "no such argument";
    }
    case Engine::AbModels:
      return holds_in_all_minimal(in.theory(e.input), parse_literal(e.query.substr(4))) ? "true" : "false";
    case Engine::CrossCheck: return crosscheck(in, e);
  }
  return {};
}

}  // namespace

std::string Expectation::text() const {
  std::string engine = std::string(engine_name(this->engine));
  if (input != default_input(this->engine)) engine += ":" + input;
  const std::string sem = this->engine == Engine::CrossCheck ? "all" : semantics ? std::string(to_string(*semantics)) : "-";
  return engine + " " + query + " " + sem + " " + expected;
}

bool CaseReport::passed() const {
  return !error && std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.pass; });
}

std::size_t Summary::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& r) { return r.passed(); }));
}

fs::path resolve_corpus_dir(const fs::path& fallback) {
  if (const char* env = std::getenv("DEFEASOR_CORPUS_DIR"); env && *env) return fs::path(env);
  return fallback;
}

std::vector<std::string> list_cases(const fs::path& corpus_dir) {
  std::vector<std::string> ids;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(corpus_dir, ec)) {
    if (entry.is_directory() && fs::exists(entry.path() / kExpectFile)) ids.push_back(entry.path().filename().string());
  }
  if (ec) throw CorpusError("cannot read corpus directory '" + corpus_dir.string() + "': " + ec.message());
  std::sort(ids.begin(), ids.end());
  return ids;
}

Case load_case(const fs::path& corpus_dir, const std::string& id) {
  Case c;
  c.id = id;
  c.dir = corpus_dir / id;
  if (!fs::exists(c.dir / kExpectFile)) throw CorpusError("unknown case '" + id + "'");
  for (const auto& entry : fs::directory_iterator(c.dir)) {
    auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name != kExpectFile) c.inputs.push_back(name);
  }
  std::sort(c.inputs.begin(), c.inputs.end());

  const auto text = read_text_file(c.dir / kExpectFile);
  std::istringstream in(text);
  int line_no = 0;
  bool header = true;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header) {
        auto d = detail::trim(line.substr(1));
        if (!c.description.empty()) c.description += ' ';
        c.description += std::string(d);
      }
      continue;
    }
    header = false;
    try {
      c.expectations.push_back(parse_expectation(line_no, line, c));
    } catch (const Error& e) {
      throw CorpusError("case '" + id + "', expect.txt line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (c.expectations.empty()) throw CorpusError("case '" + id + "' has no expectations");
  return c;
}

CaseReport run_case(const Case& c) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport report;
  report.id = c.id;
  CaseInputs inputs(c);
  for (const auto& e : c.expectations) {
    Outcome o;
    o.expectation = e;
    try {
      o.actual = evaluate_expectation(inputs, e);
      o.pass = matches(e, o.actual);
    } catch (const std::exception& err) {
      o.actual = std::string("error: ") + err.what();
      o.pass = false;
    }
    report.outcomes.push_back(std::move(o));
  }
  report.runtime = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

CaseReport run_case(const fs::path& corpus_dir, const std::string& id) { return run_case(load_case(corpus_dir, id)); }

Summary run_all(const fs::path& corpus_dir, const std::vector<std::string>& prefixes) {
  std::vector<std::string> ids;
  for (const auto& id : list_cases(corpus_dir)) {
    bool wanted = prefixes.empty() ||
                  std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) { return starts_with(id, p); });
    if (wanted) ids.push_back(id);
  }
  std::vector<std::future<CaseReport>> jobs;
  for (const auto& id : ids) {
    jobs.push_back(std::async(std::launch::async, [corpus_dir, id] {
      try {
        return run_case(load_case(corpus_dir, id));
      } catch (const std::exception& e) {
        CaseReport r;
        r.id = id;
        r.error = e.what();
        return r;
      }
    }));
  }
  Summary s;
  for (auto& j : jobs) s.cases.push_back(j.get());
  return s;
}

std::string render_text(const Summary& s, RenderOptions opts) {
  std::ostringstream out;
  for (const auto& c : s.cases) {
    std::size_t ok = std::count_if(c.outcomes.begin(), c.outcomes.end(), [](const Outcome& o) { return o.pass; });
    out << (c.passed() ? "PASS " : "FAIL ") << c.id << " (" << ok << "/" << c.outcomes.size() << ")";
    if (opts.timing) out << " " << c.runtime.count() << "us";
    out << "\n";
    if (c.error) out << "  error: " << *c.error << "\n";
    for (const auto& o : c.outcomes) {
      if (o.pass) {
        out << "  ok   " << o.expectation.text() << "\n";
      } else {
        out << "  FAIL " << o.expectation.text() << "\n"
            << "       actual: " << o.actual << "\n"
            << "       anchor: " << o.expectation.anchor << "\n";
      }
    }
  }
  out << "summary: " << s.cases.size() << " cases, " << s.passed() << " passed, " << s.failed() << " failed\n";
  return out.str();
}

std::string render_json(const Summary& s, RenderOptions opts) {
  nlohmann::ordered_json j;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : s.cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["passed"] = c.passed();
    jc["error"] = c.error ? nlohmann::ordered_json(*c.error) : nlohmann::ordered_json(nullptr);
    if (opts.timing) jc["runtime_us"] = c.runtime.count();
    jc["outcomes"] = nlohmann::ordered_json::array();
    for (const auto& o : c.outcomes) {
      const auto& e = o.expectation;
      jc["outcomes"].push_back({{"engine", std::string(engine_name(e.engine))},
                                {"input", e.input},
                                {"query", e.query},
                                {"semantics", e.semantics ? std::string(to_string(*e.semantics)) : "-"},
                                {"expected", e.expected},
                                {"actual", o.actual},
                                {"pass", o.pass},
                                {"anchor", e.anchor}});
    }
    j["cases"].push_back(std::move(jc));
  }
  j["summary"] = {{"cases", s.cases.size()}, {"passed", s.passed()}, {"failed", s.failed()}};
  return j.dump(2) + "\n";
}

}  // namespace defeasor::corpus
