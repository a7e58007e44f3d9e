#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "defeasor/af_format.hpp"
#include "defeasor/arguments.hpp"
#include "defeasor/conclusions.hpp"
#include "defeasor/corpus.hpp"
#include "defeasor/diff.hpp"
#include "defeasor/dot.hpp"
#include "defeasor/horty.hpp"
#include "defeasor/io.hpp"
#include "defeasor/models.hpp"
#include "defeasor/rulebase.hpp"
#include "defeasor/theory.hpp"
#include "json.hpp"

#ifndef DEFEASOR_DEFAULT_CORPUS_DIR
#define DEFEASOR_DEFAULT_CORPUS_DIR "corpus"
#endif

using namespace defeasor;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string semantics = "grounded";
  bool json = false;
  std::string dot;
  std::string query;
  int height_cap = kDefaultHeightCap;
  std::vector<std::string> prefixes;
  bool timing = false;
  std::string corpus_dir;
};

SemanticsKind semantics_of(const Options& o) {
  auto k = parse_semantics(o.semantics);
  if (!k) throw InputError("unknown semantics '" + o.semantics + "'");
  return *k;
}

bool is_rulebase(const std::string& path) { return fs::path(path).extension() == ".rb"; }

RuleBase load_rulebase(const std::string& path) { return parse_rulebase(read_text_file(path)); }

// Rule bases are compiled; anything else is read as a framework file.
Framework load_framework(const Options& o) {
  if (is_rulebase(o.input)) return compile(load_rulebase(o.input), o.height_cap);
  return parse_framework(read_text_file(o.input));
}

json set_json(const ArgSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

int cmd_semantics(const Options& o) {
  const auto f = load_framework(o);
  const auto kind = semantics_of(o);
  const auto eval = evaluate(f, kind);
  if (o.json) {
    json j;
    j["semantics"] = std::string(to_string(kind));
    j["extensions"] = json::array();
    for (const auto& e : eval.extensions) j["extensions"].push_back(set_json(e));
    j["no_stable_extension"] = eval.no_stable_extension;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (eval.no_stable_extension) std::cout << "no stable extension\n";
  for (const auto& e : eval.extensions) std::cout << format_set(e) << "\n";
  return 0;
}

int cmd_status(const Options& o) {
  const auto f = load_framework(o);
  const auto kind = semantics_of(o);
  const auto eval = evaluate(f, kind);
  const auto conclusions = concluded(f);
  if (o.json) {
    json j;
    j["semantics"] = std::string(to_string(kind));
    j["arguments"] = json::object();
    for (const auto& a : f.args()) j["arguments"][a] = std::string(to_string(argument_status(f, eval, a)));
    j["conclusions"] = json::object();
    for (const auto& c : conclusions) j["conclusions"][to_string(c)] = std::string(to_string(conclusion_status(f, eval, c)));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "semantics: " << to_string(kind) << "\n";
  for (const auto& a : f.args()) std::cout << "arg " << a << " " << to_string(argument_status(f, eval, a)) << "\n";
  for (const auto& c : conclusions) {
    std::cout << "lit " << to_string(c) << " " << to_string(conclusion_status(f, eval, c)) << "\n";
  }
  return 0;
}

json framework_json(const Framework& f) {
  json j;
  j["args"] = json(f.args());
  j["defeats"] = json::array();
  for (const auto& [a, b] : f.defeat_pairs()) j["defeats"].push_back({a, b});
  j["subargs"] = json::array();
  for (const auto& [c, p] : f.subarg_pairs()) j["subargs"].push_back({c, p});
  j["conclusions"] = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.conclusion(i)) j["conclusions"][f.name(i)] = to_string(*f.conclusion(i));
  }
  return j;
}

int cmd_build(const Options& o) {
  const auto f = compile(load_rulebase(o.input), o.height_cap);
  if (!o.dot.empty()) write_file(o.dot, to_dot(f, semantics_of(o)));
  if (o.json) {
    std::cout << framework_json(f).dump(2) << "\n";
  } else {
    std::cout << serialize_framework(f);
  }
  return 0;
}

int cmd_export(const Options& o) {
  const auto f = load_framework(o);
  const auto dot = to_dot(f, semantics_of(o));
  if (o.dot.empty()) {
    std::cout << dot;
  } else {
    write_file(o.dot, dot);
  }
  return 0;
}

int cmd_horty(const Options& o) {
  const auto r = horty_evaluate(load_rulebase(o.input), o.height_cap);
  if (o.json) {
    json j;
    j["survivors"] = json::array();
    for (const auto& a : r.survivors) j["survivors"].push_back(a.id);
    j["discarded"] = json::array();
    for (const auto& d : r.discarded) {
      j["discarded"].push_back({{"argument", d.argument.id},
                                {"reason", std::string(to_string(d.reason))},
                                {"height", d.height},
                                {"phase", std::string(to_string(d.phase))},
                                {"culprits", d.culprits}});
    }
    j["conclusions"] = json::array();
    for (const auto& c : r.conclusions) j["conclusions"].push_back(to_string(c));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "survivors:";
  for (const auto& a : r.survivors) std::cout << " " << a.id;
  std::cout << "\nconclusions:";
  for (const auto& c : r.conclusions) std::cout << " " << to_string(c);
  std::cout << "\ntrace:\n" << horty_trace(r);
  return 0;
}

int cmd_minmodels(const Options& o) {
  const auto t = parse_theory(read_text_file(o.input));
  std::vector<Literal> queries = t.queries;
  if (!o.query.empty()) queries = {parse_literal(o.query)};
  const auto models = minimal_models(t);
  if (o.json) {
    json j;
    j["minimal_models"] = json::array();
    for (const auto& m : models) j["minimal_models"].push_back(m.true_atoms());
    j["queries"] = json::array();
    for (const auto& q : queries) {
      const auto e = entailment(t, q);
      j["queries"].push_back({{"literal", q.str()}, {"holds", e.holds}, {"vacuous", e.vacuous}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& q : queries) {
    const auto e = entailment(t, q);
    std::cout << q.str() << ": " << (e.holds ? "true" : "false") << (e.vacuous ? " (no minimal model)" : "") << "\n";
  }
  std::cout << "minimal models (" << models.size() << "):\n";
  for (const auto& m : models) {
    std::cout << "  {";
    bool first = true;
    for (const auto& a : m.true_atoms()) {
      std::cout << (first ? "" : ", ") << a;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_diff(const Options& o) {
  const auto report = diff_semantics(load_rulebase(o.input), o.height_cap);
  std::cout << (o.json ? render_json(report) : render_text(report));
  return 0;
}

int cmd_corpus(const Options& o) {
  const fs::path dir = o.corpus_dir.empty() ? corpus::resolve_corpus_dir(DEFEASOR_DEFAULT_CORPUS_DIR) : fs::path(o.corpus_dir);
  const auto summary = corpus::run_all(dir, o.prefixes);
  if (summary.cases.empty()) throw corpus::CorpusError("no corpus cases matched in '" + dir.string() + "'");
  corpus::RenderOptions ro{o.timing};
  std::cout << (o.json ? corpus::render_json(summary, ro) : corpus::render_text(summary, ro));
  return summary.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible argumentation toolkit"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "defeasor 0.1.0");
  Options o;

  auto add_semantics = [&](CLI::App* c) {
    c->add_option("--semantics", o.semantics, "grounded, complete, preferred or stable")
        ->check(CLI::IsMember({"grounded", "complete", "preferred", "stable"}));
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--height-cap", o.height_cap, "maximum argument height")->check(CLI::PositiveNumber);
  };

  auto* sem = app.add_subcommand("semantics", "extensions of a framework (.af) or compiled rule base (.rb)");
  sem->add_option("file", o.input)->required();
  add_semantics(sem);
  add_json(sem);
  add_cap(sem);

  auto* status = app.add_subcommand("status", "argument and conclusion statuses");
  status->add_option("file", o.input)->required();
  add_semantics(status);
  add_json(status);
  add_cap(status);

  auto* build = app.add_subcommand("build", "compile a rule base into a framework file");
  build->add_option("file", o.input)->required();
  build->add_option("--dot", o.dot, "also write a DOT graph here");
  add_semantics(build);
  add_json(build);
  add_cap(build);

  auto* horty = app.add_subcommand("horty", "interleaved skeptical evaluation of a rule base");
  horty->add_option("file", o.input)->required();
  add_json(horty);
  add_cap(horty);

  auto* mm = app.add_subcommand("minmodels", "minimal models of a theory");
  mm->add_option("file", o.input)->required();
  mm->add_option("--query", o.query, "literal to test in every minimal model");
  add_json(mm);

  auto* diff = app.add_subcommand("diff", "compare conclusion statuses across evaluation routes");
  diff->add_option("file", o.input)->required();
  add_json(diff);
  add_cap(diff);

  auto* corpus_cmd = app.add_subcommand("corpus", "run the example corpus");
  corpus_cmd->add_option("cases", o.prefixes, "case id prefixes");
  corpus_cmd->add_option("--dir", o.corpus_dir, "corpus directory");
  corpus_cmd->add_flag("--timing", o.timing, "report per-case runtime");
  add_json(corpus_cmd);

  auto* exp = app.add_subcommand("export", "DOT graph of a framework or compiled rule base");
  exp->add_option("file", o.input)->required();
  exp->add_option("--dot", o.dot, "output path (stdout when omitted)");
  add_semantics(exp);
  add_cap(exp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sem->parsed()) return cmd_semantics(o);
    if (status->parsed()) return cmd_status(o);
    if (build->parsed()) return cmd_build(o);
    if (horty->parsed()) return cmd_horty(o);
    if (mm->parsed()) return cmd_minmodels(o);
    if (diff->parsed()) return cmd_diff(o);
    if (corpus_cmd->parsed()) return cmd_corpus(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const std::exception& e) {
    std::cerr << "error: ";
    if (!o.input.empty()) std::cerr << o.input << ": ";
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
