#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defeasor/af_format.hpp"
#include "defeasor/arguments.hpp"
#include "defeasor/conclusions.hpp"
#include "defeasor/corpus.hpp"
#include "defeasor/diff.hpp"
#include "defeasor/dot.hpp"
#include "defeasor/horty.hpp"
#include "defeasor/models.hpp"
#include "defeasor/rulebase.hpp"
#include "defeasor/theory.hpp"

namespace py = pybind11;
using namespace defeasor;

namespace {

SemanticsKind kind_of(const std::string& name) {
  auto k = parse_semantics(name);
  if (!k) throw InputError("unknown semantics '" + name + "'");
  return *k;
}

std::vector<std::vector<std::string>> as_lists(const std::vector<ArgSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Abstract and structured defeasible argumentation";
  m.attr("__version__") = DEFEASOR_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CyclicRuleBaseError>(m, "CyclicRuleBaseError", base.ptr());
  py::register_exception<PriorityCycleError>(m, "PriorityCycleError", base.ptr());
  py::register_exception<corpus::CorpusError>(m, "CorpusError", base.ptr());

  py::class_<Framework>(m, "Framework")
      .def_static("parse", [](const std::string& text) { return parse_framework(text); }, py::arg("text"))
      .def_static(
          "compile", [](const std::string& text, int cap) { return compile(parse_rulebase(text), cap); },
          py::arg("rulebase_text"), py::arg("height_cap") = kDefaultHeightCap)
      .def_property_readonly("args", &Framework::args)
      .def_property_readonly("defeats", &Framework::defeat_pairs)
      .def_property_readonly("subargs", &Framework::subarg_pairs)
      .def("__len__", &Framework::size)
      .def(
          "extensions",
          [](const Framework& f, const std::string& sem) { return as_lists(evaluate(f, kind_of(sem)).extensions); },
          py::arg("semantics") = "grounded")
      .def(
          "status",
          [](const Framework& f, const std::string& arg, const std::string& sem) {
            return std::string(to_string(argument_status(f, arg, kind_of(sem))));
          },
          py::arg("arg"), py::arg("semantics") = "grounded")
      .def(
          "conclusion_status",
          [](const Framework& f, const std::string& lit, const std::string& sem) {
            return std::string(to_string(conclusion_status(f, parse_conclusion(lit), kind_of(sem))));
          },
          py::arg("literal"), py::arg("semantics") = "grounded")
      .def(
          "floating",
          [](const Framework& f, const std::string& sem) {
            std::vector<std::string> out;
            for (const auto& c : detect_floating_conclusions(f, kind_of(sem))) out.push_back(to_string(c));
            return out;
          },
          py::arg("semantics") = "preferred")
      .def(
          "zombies",
          [](const Framework& f, const std::string& sem) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& z : detect_zombies(f, kind_of(sem))) out.emplace_back(z.zombie, z.victim);
            return out;
          },
          py::arg("semantics") = "preferred")
      .def("to_text", [](const Framework& f) { return serialize_framework(f); })
      .def(
          "to_dot", [](const Framework& f, const std::string& sem) { return to_dot(f, kind_of(sem)); },
          py::arg("semantics") = "grounded");

  m.def(
      "horty",
      [](const std::string& text, int cap) {
        const auto r = horty_evaluate(parse_rulebase(text), cap);
        py::dict out;
        std::vector<std::string> survivors, conclusions;
        for (const auto& a : r.survivors) survivors.push_back(a.id);
        for (const auto& c : r.conclusions) conclusions.push_back(to_string(c));
        py::list discarded;
        for (const auto& d : r.discarded) {
          discarded.append(py::dict(py::arg("argument") = d.argument.id,
                                    py::arg("reason") = std::string(to_string(d.reason)), py::arg("height") = d.height,
                                    py::arg("phase") = std::string(to_string(d.phase)),
                                    py::arg("culprits") = d.culprits));
        }
        out["survivors"] = survivors;
        out["conclusions"] = conclusions;
        out["discarded"] = discarded;
        return out;
      },
      py::arg("rulebase_text"), py::arg("height_cap") = kDefaultHeightCap);

  m.def(
      "minimal_models",
      [](const std::string& text) {
        std::vector<std::set<std::string>> out;
        for (const auto& model : minimal_models(parse_theory(text))) out.push_back(model.true_atoms());
        return out;
      },
      py::arg("theory_text"), "True atoms of each minimal model.");

  m.def(
      "holds_in_all_minimal",
      [](const std::string& text, const std::string& lit) {
        return holds_in_all_minimal(parse_theory(text), parse_literal(lit));
      },
      py::arg("theory_text"), py::arg("literal"));

  m.def(
      "diff_json",
      [](const std::string& text, int cap) { return render_json(diff_semantics(parse_rulebase(text), cap)); },
      py::arg("rulebase_text"), py::arg("height_cap") = kDefaultHeightCap);

  m.def(
      "run_corpus_json",
      [](const std::string& dir, const std::vector<std::string>& prefixes) {
        corpus::Summary s;
        {
          py::gil_scoped_release release;
          s = corpus::run_all(dir, prefixes);
        }
        return std::make_pair(s.all_passed(), corpus::render_json(s));
      },
      py::arg("corpus_dir"), py::arg("prefixes") = std::vector<std::string>{});
}
