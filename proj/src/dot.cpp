#include "defeasor/dot.hpp"

#include <sstream>

namespace defeasor {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

const char* fill(Status s) {
  switch (s) {
    case Status::Justified: return "palegreen";
    case Status::Defensible: return "khaki";
    case Status::Overruled: return "lightcoral";
  }
  return "white";
}

}  // namespace

std::string to_dot(const Framework& f, SemanticsKind kind) {
  const auto eval = evaluate(f, kind);
  std::ostringstream out;
  out << "digraph framework {\n";
  out << "  // node colour: argument status under " << to_string(kind) << " semantics\n";
  out << "  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto status = argument_status(f, eval, f.name(i));
    std::string label = f.name(i);
    if (f.conclusion(i)) label += "\\n" + to_string(*f.conclusion(i));
    out << "  " << quoted(f.name(i)) << " [label=\"" << label << "\", fillcolor=" << fill(status)
        << ", tooltip=\"" << to_string(status) << "\"];\n";
  }
  for (const auto& [a, b] : f.defeat_pairs()) out << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  for (const auto& [c, p] : f.subarg_pairs()) {
    out << "  " << quoted(c) << " -> " << quoted(p) << " [style=dashed, arrowhead=none, color=gray];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace defeasor
