#include "defeasor/af_format.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "defeasor/errors.hpp"
#include "text_util.hpp"

namespace defeasor {

using detail::split;
using detail::trim;

bool is_arg_name(std::string_view s) {
  if (s.empty()) return false;
  int depth = 0;
  for (char ch : s) {
    auto u = static_cast<unsigned char>(ch);
    if (std::isalnum(u) || ch == '_' || ch == '~') continue;
    if (ch == '[') {
      ++depth;
    } else if (ch == ']') {
      if (--depth < 0) return false;
    } else if (ch == ';') {
      if (depth == 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

namespace {

struct Call {
  std::string_view head;
  std::vector<std::string_view> args;
};

Call parse_call(int line, std::string_view stmt) {
  auto open = stmt.find('(');
  if (open == std::string_view::npos || stmt.back() != ')') {
    throw ParseError(line, "expected NAME(...) statement, got '" + std::string(stmt) + "'");
  }
  Call c;
  c.head = trim(stmt.substr(0, open));
  auto inner = stmt.substr(open + 1, stmt.size() - open - 2);
  // Compiled argument names contain ';' inside brackets but never ',' so a
  // plain comma split is enough.
  c.args = split(inner, ',');
  return c;
}

std::string checked_name(int line, std::string_view s) {
  if (!is_arg_name(s)) throw ParseError(line, "invalid argument name '" + std::string(s) + "'");
  return std::string(s);
}

struct LinedSpec {
  FrameworkSpec spec;
  std::vector<int> arg_lines, attack_lines, subarg_lines, conclusion_lines;
};

LinedSpec parse_lined(std::string_view text) {
  LinedSpec out;
  auto& spec = out.spec;
  detail::for_each_statement(text, [&](int line, std::string_view stmt) {
    auto call = parse_call(line, stmt);
    auto arity = [&](std::size_t n) {
      if (call.args.size() != n) {
        throw ParseError(line, std::string(call.head) + " expects " + std::to_string(n) + " argument(s)");
      }
    };
    if (call.head == "arg") {
      arity(1);
      spec.args.push_back(checked_name(line, call.args[0]));
      out.arg_lines.push_back(line);
    } else if (call.head == "att") {
      arity(2);
      spec.attacks.emplace_back(checked_name(line, call.args[0]), checked_name(line, call.args[1]));
      out.attack_lines.push_back(line);
    } else if (call.head == "sub") {
      arity(2);
      spec.subargs.emplace_back(checked_name(line, call.args[0]), checked_name(line, call.args[1]));
      out.subarg_lines.push_back(line);
    } else if (call.head == "conc") {
      arity(2);
      try {
        spec.conclusions.emplace_back(checked_name(line, call.args[0]), parse_conclusion(call.args[1]));
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
      out.conclusion_lines.push_back(line);
    } else {
      throw ParseError(line, "unknown statement '" + std::string(call.head) + "'");
    }
  });
  return out;
}

}  // namespace

FrameworkSpec parse_framework_spec(std::string_view text) { return parse_lined(text).spec; }

Framework parse_framework(std::string_view text) {
  auto lined = parse_lined(text);
  const auto& spec = lined.spec;
  std::set<std::string> known;
  for (std::size_t i = 0; i < spec.args.size(); ++i) {
    if (!known.insert(spec.args[i]).second) {
      throw ParseError(lined.arg_lines[i], "argument '" + spec.args[i] + "' declared twice");
    }
  }
  auto check = [&](const std::string& name, int line) {
    if (!known.count(name)) throw ParseError(line, "undeclared argument '" + name + "'");
  };
  for (std::size_t i = 0; i < spec.attacks.size(); ++i) {
    check(spec.attacks[i].first, lined.attack_lines[i]);
    check(spec.attacks[i].second, lined.attack_lines[i]);
  }
  for (std::size_t i = 0; i < spec.subargs.size(); ++i) {
    check(spec.subargs[i].first, lined.subarg_lines[i]);
    check(spec.subargs[i].second, lined.subarg_lines[i]);
  }
  for (std::size_t i = 0; i < spec.conclusions.size(); ++i) {
    check(spec.conclusions[i].first, lined.conclusion_lines[i]);
  }
  return Framework(spec);
}

std::string serialize_framework(const FrameworkSpec& spec) {
  std::ostringstream out;
  for (const auto& a : spec.args) out << "arg(" << a << ").\n";
  for (const auto& [a, b] : spec.attacks) out << "att(" << a << "," << b << ").\n";
  for (const auto& [c, p] : spec.subargs) out << "sub(" << c << "," << p << ").\n";
  for (const auto& [a, c] : spec.conclusions) out << "conc(" << a << ", " << to_string(c) << ").\n";
  return out.str();
}

std::string serialize_framework(const Framework& f) { return serialize_framework(f.to_spec()); }

}  // namespace defeasor
